//! Exact arithmetic in `q` and `t` over the rationals.

mod bipoly;
mod factored;
pub mod qnum;
mod ratfunc;
pub(crate) mod ring;
pub mod sample;
mod unipoly;
mod unirat;

pub use bipoly::BiPoly;
pub use factored::{sum_factored, Factored, Irreducible};
pub use qnum::{pochhammer_qq, q_fact, q_int, q_pochhammer};
pub use ratfunc::{NumDen, RatFunc};
pub use ring::Ring;
pub use sample::{SamplePoints, DEFAULT_SEED};
pub use unipoly::UniPoly;
pub use unirat::UniRat;

pub use num_rational::BigRational;

/// Integer as a rational number.
pub fn rational(n: i64) -> BigRational {
    ring::rat(n)
}
