use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::{lattice_quotient, smith_normal_form, FinAbGroup};
use crate::{Error, Result};

/// Order of an element in a lattice quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(BigInt),
    Infinite,
}

impl ElementOrder {
    pub fn finite_i64(n: i64) -> Self {
        ElementOrder::Finite(BigInt::from(n))
    }

    pub fn as_finite(&self) -> Option<&BigInt> {
        match self {
            ElementOrder::Finite(n) => Some(n),
            ElementOrder::Infinite => None,
        }
    }
}

/// A sublattice `L ⊆ Zⁿ` presented by generating columns, with a cached
/// column Hermite form for membership queries and cached Smith data for
/// element orders.
#[derive(Clone, Debug)]
pub struct LatticePresentation {
    ambient: usize,
    generators: IntMatrix,
    hermite: IntMatrix,
    pivots: Vec<(usize, usize)>,
    // Ux maps a vector into coordinates where the lattice is diagonal with
    // the given entries (0 meaning no constraint row).
    snf_u: IntMatrix,
    snf_diag: Vec<BigInt>,
}

impl LatticePresentation {
    pub fn new(ambient: usize, generators: IntMatrix) -> Result<Self> {
        if generators.rows() != ambient {
            return Err(Error::Dimension(format!(
                "lattice generators have {} rows, ambient rank is {ambient}",
                generators.rows()
            )));
        }
        let (hermite, pivots) = column_hermite(&generators);
        let (snf_u, snf_diag) = if generators.cols() == 0 {
            (IntMatrix::identity(ambient), vec![BigInt::zero(); ambient])
        } else {
            let snf = smith_normal_form(&generators)?;
            let mut diag = snf.divisors.clone();
            diag.resize(ambient, BigInt::zero());
            (snf.u, diag)
        };
        Ok(LatticePresentation { ambient, generators, hermite, pivots, snf_u, snf_diag })
    }

    pub fn from_columns(ambient: usize, columns: Vec<Vec<BigInt>>) -> Result<Self> {
        Self::new(ambient, IntMatrix::from_columns(ambient, columns)?)
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    /// Canonical column Hermite form (zero columns dropped); equal lattices
    /// have identical Hermite forms.
    pub fn hermite_form(&self) -> &IntMatrix {
        &self.hermite
    }

    pub fn same_lattice(&self, other: &LatticePresentation) -> bool {
        self.ambient == other.ambient && self.hermite == other.hermite
    }

    /// Is `v` in the lattice? Solved greedily against the Hermite form.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::Dimension(format!(
                "vector of length {} in ambient rank {}",
                v.len(),
                self.ambient
            )));
        }
        let mut w: Vec<BigInt> = v.to_vec();
        for &(r, j) in &self.pivots {
            let p = self.hermite.at(r, j);
            if !(&w[r] % p).is_zero() {
                return Ok(false);
            }
            let q = &w[r] / p;
            if !q.is_zero() {
                for i in 0..self.ambient {
                    let sub = &q * self.hermite.at(i, j);
                    w[i] -= sub;
                }
            }
        }
        Ok(w.iter().all(|x| x.is_zero()))
    }

    /// Smallest `t > 0` with `t·v ∈ L`, or `Infinite`.
    pub fn element_order(&self, v: &[BigInt]) -> Result<ElementOrder> {
        if v.len() != self.ambient {
            return Err(Error::Dimension(format!(
                "vector of length {} in ambient rank {}",
                v.len(),
                self.ambient
            )));
        }
        // w = U v puts the lattice in diagonal coordinates
        let mut order = BigInt::one();
        for i in 0..self.ambient {
            let mut wi = BigInt::zero();
            for j in 0..self.ambient {
                wi += self.snf_u.at(i, j) * &v[j];
            }
            let d = &self.snf_diag[i];
            if d.is_zero() {
                if !wi.is_zero() {
                    return Ok(ElementOrder::Infinite);
                }
            } else if !wi.is_zero() {
                let t = d / wi.gcd(d);
                order = order.lcm(&t);
            }
        }
        Ok(ElementOrder::Finite(order))
    }

    pub fn quotient(&self) -> Result<FinAbGroup> {
        lattice_quotient(self.ambient, &self.generators)
    }

    /// A new presentation with extra generating columns adjoined.
    pub fn adjoin_columns(&self, extra: Vec<Vec<BigInt>>) -> Result<LatticePresentation> {
        let mut cols = self.generators.columns();
        cols.extend(extra);
        LatticePresentation::from_columns(self.ambient, cols)
    }

    pub fn element(&self, coset: Vec<BigInt>) -> Result<QuotientElement> {
        if coset.len() != self.ambient {
            return Err(Error::Dimension(format!(
                "coset vector of length {} in ambient rank {}",
                coset.len(),
                self.ambient
            )));
        }
        Ok(QuotientElement { coset, lattice: self.clone() })
    }
}

/// An element of `Zⁿ/L`, carried as a representative vector together with
/// the lattice presentation.
#[derive(Clone, Debug)]
pub struct QuotientElement {
    pub coset: Vec<BigInt>,
    pub lattice: LatticePresentation,
}

impl QuotientElement {
    pub fn order(&self) -> Result<ElementOrder> {
        self.lattice.element_order(&self.coset)
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.lattice.contains(&self.coset)
    }
}

impl PartialEq for QuotientElement {
    fn eq(&self, other: &Self) -> bool {
        if !self.lattice.same_lattice(&other.lattice) || self.coset.len() != other.coset.len() {
            return false;
        }
        let diff: Vec<BigInt> = self
            .coset
            .iter()
            .zip(&other.coset)
            .map(|(a, b)| a - b)
            .collect();
        self.lattice.contains(&diff).unwrap_or(false)
    }
}

/// Canonical column-style Hermite form. Columns are echelon with strictly
/// increasing pivot rows, positive pivots, zeros above each pivot, and
/// entries left of a pivot reduced into `[0, pivot)`. Zero columns dropped.
fn column_hermite(a: &IntMatrix) -> (IntMatrix, Vec<(usize, usize)>) {
    let n = a.rows();
    let m = a.cols();
    let mut h = a.clone();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut frontier = 0usize;
    for r in 0..n {
        if frontier >= m {
            break;
        }
        loop {
            // smallest-magnitude nonzero entry in row r at or after frontier
            let mut best: Option<usize> = None;
            for j in frontier..m {
                if h.at(r, j).is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(j),
                    Some(b) => {
                        if h.at(r, j).abs() < h.at(r, b).abs() {
                            best = Some(j);
                        }
                    }
                }
            }
            let Some(p) = best else { break };
            let mut clean = true;
            for j in frontier..m {
                if j == p || h.at(r, j).is_zero() {
                    continue;
                }
                let q = -(h.at(r, j) / h.at(r, p));
                h.add_col_multiple(j, p, &q);
                if !h.at(r, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            h.swap_cols(frontier, p);
            if h.at(r, frontier).is_negative() {
                h.negate_col(frontier);
            }
            // canonical reduction of earlier columns in this pivot row
            for j in 0..frontier {
                let q = -h.at(r, j).div_floor(h.at(r, frontier));
                h.add_col_multiple(j, frontier, &q);
            }
            pivots.push((r, frontier));
            frontier += 1;
            break;
        }
    }
    // drop the zero tail
    let kept: Vec<Vec<BigInt>> = (0..frontier).map(|j| h.column(j)).collect();
    let h = IntMatrix::from_columns(n, kept).expect("column dimensions preserved");
    (h, pivots)
}
