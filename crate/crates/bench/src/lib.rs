//! Shared fixtures for the criterion benches.

use homcode_core::{make_named, FiniteGroup};

pub fn group(name: &str) -> FiniteGroup {
    make_named(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}
