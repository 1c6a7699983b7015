//! Runs the guide's Rust listings as doc-tests, so the book cannot drift
//! from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/tilings.md")]
pub mod tilings {}

#[doc = include_str!("../../../book/src/compositions.md")]
pub mod compositions {}

#[doc = include_str!("../../../book/src/fibonacci.md")]
pub mod fibonacci {}

#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}

#[doc = include_str!("../../../book/src/identities.md")]
pub mod identities {}

#[doc = include_str!("../../../book/src/tables.md")]
pub mod tables {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
