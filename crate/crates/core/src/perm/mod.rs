//! The permutations `tau_p(g)` and `rho_p` that rearrange `{a_i^2}_p` into
//! `{g^(4i)}_p` and into ascending order, their signs by inversion parity,
//! and the closed forms that predict those signs.

mod products;
mod sequences;
mod sign;
mod theorems;

pub(crate) use products::vandermonde;
pub use products::{lemma23, lemma23_closed, s_product, s_product_check, w_product, Lemma23, SProductCheck};
pub(crate) use sequences::seq_e;
pub use sequences::{build_sequences, sgn_rho_direct, sgn_tau_direct, ResidueSequences, TauKernel};
pub use sign::{count_inversions, perm_sign, Sign};
pub use theorems::{
    balance, g_independence_check, tau_pairing, tau_pairing_check, theorem_a_predict,
    theorem_b_record, Balance, PairingSummary, SignRecord, TauAnalysis, TheoremAPrediction,
};
pub(crate) use theorems::pairing_from;
