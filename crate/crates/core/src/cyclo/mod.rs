//! Cyclotomic machinery behind the denominator of the `tau_p(g)` sign: the
//! closed form of `P(zeta)`, its reduction `G(g)` modulo `p`, the direct
//! product over powers of a primitive root, and the splitting of
//! `Phi_(p-1)` into linear factors modulo `p`.

mod denominator;
mod poly;
mod pz;

pub(crate) use denominator::g_poly_unchecked;
pub use denominator::{denominator_floor_form, denominator_product, g_poly_value};
pub use poly::{cyclotomic_poly, cyclotomic_split, cyclotomic_split_check, IntPoly, SplitCheck, SPLIT_CHECK_BOUND};
pub use pz::{
    nu2, p_closed, p_eval_numeric, p_squared_formula, relative_error, ClosedFormPz, Phase,
    NUMERIC_BOUND,
};
