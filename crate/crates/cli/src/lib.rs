//! Rendering, serialization, GF-spec parsing, and verification suites
//! behind the `pauli-pascal` binary, exposed as a library for the
//! integration and acceptance tests.

pub mod gfspec;
pub mod render;
pub mod serial;
pub mod verify;
