//! Exact arithmetic: rationals, quadratic fields, polynomials, rational
//! functions and resultants.

pub mod bivar;
pub mod laurent;
pub mod parse;
pub mod poly;
pub mod quadext;
pub mod ratfunc;
pub mod resultant;
pub mod ring;
pub mod text;

pub use bivar::BivarPoly;
pub use laurent::{palindromic_expand, palindromic_reduce};
pub use parse::{lift, parse_ratfunc, parse_rational, to_rational, Grammar};
pub use poly::{Poly, SquarefreeFactorization};
pub use quadext::{QuadExt, QuadExtElem};
pub use ratfunc::RatFunc;
pub use resultant::resultant;
pub use ring::{rat, Field, Ring};
