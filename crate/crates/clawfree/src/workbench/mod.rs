//! Generators, file formats, certificates and small-graph enumeration.

pub mod certificate;
pub mod enumerate;
pub mod generators;
pub mod io;
