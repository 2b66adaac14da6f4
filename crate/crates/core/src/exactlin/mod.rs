//! Exact integer linear algebra: matrices over arbitrary-precision integers,
//! Smith and Hermite normal forms, lattice quotients, and canonical finitely
//! generated abelian groups.

mod abgroup;
mod lattice;
mod matrix;
mod snf;

pub use abgroup::FinAbGroup;
pub use lattice::{ElementOrder, LatticePresentation, QuotientElement};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};

use num_bigint::BigInt;

/// Quotient `Zⁿ / L` where `L` is the column span of `generators`.
///
/// The result is canonical: invariant under column permutation, negation and
/// any unimodular column operation on `generators`.
pub fn lattice_quotient(ambient_rank: usize, generators: &IntMatrix) -> crate::Result<FinAbGroup> {
    if generators.rows() != ambient_rank {
        return Err(crate::Error::Dimension(format!(
            "lattice generators have {} rows, ambient rank is {}",
            generators.rows(),
            ambient_rank
        )));
    }
    if generators.cols() == 0 {
        return Ok(FinAbGroup::free(ambient_rank));
    }
    let snf = smith_normal_form(generators)?;
    let nonzero = snf.divisors.iter().filter(|d| !num_traits::Zero::is_zero(*d)).count();
    let torsion: Vec<BigInt> = snf
        .divisors
        .iter()
        .filter(|d| **d > BigInt::from(1))
        .cloned()
        .collect();
    Ok(FinAbGroup::from_canonical_parts(ambient_rank - nonzero, torsion))
}
