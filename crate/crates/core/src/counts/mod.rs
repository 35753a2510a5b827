//! Counting objects over quadratic and quartic residues: the Omega sets and
//! their products, the sign parameters, the difference counts `N_p(t)`,
//! `lambda_p`, `epsilon_p`, and the shifted sets `A_m`, `L_m`.

mod omega;
mod pairs;
mod shifted;

pub use omega::{omega_sets, omega_square_products, sign_params, OmegaSets, OmegaSquareProducts, SignParams};
pub(crate) use omega::{omega_products, sign_bit, sign_residue};
pub use pairs::{
    epsilon, half_quartic_residues, half_residues, lambda_and_d, lambda_sine, n_count,
    n_counts_all, n_sum_closed, proof_sums, ProofSums,
};
pub use shifted::{
    a_m_set, a_m_size_closed, am_stats, epsilon_identity, epsilon_via_r, quartic_count_closed,
    quartic_count_in_am, quartic_sum_closed, quartic_sum_over_am, rm_pair_identities, rm_record,
    AmStats, RmRecord,
};
