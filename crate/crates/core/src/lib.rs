pub mod convolve;
pub mod error;
pub mod exact;
pub mod pairs;
pub mod params;
pub mod polyring;
pub mod seqlib;
pub mod verify;

pub use error::{Error, Result};
pub use exact::Rat;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/exact.md")]
mod book_exact {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/transforms.md")]
mod book_transforms {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/convolutions.md")]
mod book_convolutions {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/polynomials.md")]
mod book_polynomials {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/verify.md")]
mod book_verify {}
