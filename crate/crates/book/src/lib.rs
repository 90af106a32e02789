//! Runs the code blocks of the guide in `book/` and of the README as doc-tests.
//!
//! mdbook cannot link against workspace crates, so each chapter is pulled in
//! here as the documentation of an empty module. One module per chapter keeps
//! failures traceable to their file.

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/concurrence.md")]
mod concurrence {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/channel.md")]
mod channel {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/witnesses.md")]
mod witnesses {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/protocol.md")]
mod protocol {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
