//! Document format, SVG rendering, command line and local HTTP service for
//! [`popkit_core`].

pub mod cli;
pub mod document;
pub mod server;
pub mod svg;

pub use document::{decode, encode, DocumentError, Metadata, PolygonDocument};
