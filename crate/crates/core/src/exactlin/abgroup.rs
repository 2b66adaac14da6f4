use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;

/// Finitely generated abelian group in canonical form: a free rank plus a
/// divisibility chain of torsion orders (each ≥ 2). Two values are equal
/// exactly when the groups are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup { free_rank: 0, torsion: vec![] }
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup { free_rank: rank, torsion: vec![] }
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_orders(&[order.into()])
    }

    /// Canonicalize a direct sum of cyclic groups of the given orders
    /// (order 0 meaning an infinite cyclic summand, order 1 dropped).
    pub fn from_orders(orders: &[BigInt]) -> Self {
        let mut free_rank = 0usize;
        let finite: Vec<BigInt> = orders
            .iter()
            .filter(|o| {
                if o.is_zero() {
                    free_rank += 1;
                    false
                } else {
                    true
                }
            })
            .map(|o| if o.sign() == num_bigint::Sign::Minus { -o } else { o.clone() })
            .filter(|o| !o.is_one())
            .collect();
        if finite.is_empty() {
            return FinAbGroup { free_rank, torsion: vec![] };
        }
        // Rebalance into a divisibility chain via the Smith form of the
        // diagonal matrix.
        let n = finite.len();
        let mut m = IntMatrix::zero(n, n);
        for (i, o) in finite.iter().enumerate() {
            m.set(i, i, o.clone());
        }
        let snf = super::smith_normal_form(&m).expect("nonempty diagonal matrix");
        let torsion = snf
            .divisors
            .into_iter()
            .filter(|d| *d > BigInt::one())
            .collect();
        FinAbGroup { free_rank, torsion }
    }

    pub fn from_orders_i64(orders: &[i64]) -> Self {
        let v: Vec<BigInt> = orders.iter().map(|&o| BigInt::from(o)).collect();
        Self::from_orders(&v)
    }

    /// Assemble from parts already known to be canonical (used by the
    /// quotient routines; debug-checked).
    pub(crate) fn from_canonical_parts(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        debug_assert!(torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        debug_assert!(torsion.iter().all(|t| *t >= BigInt::from(2)));
        FinAbGroup { free_rank, torsion }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the group; `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut o = BigInt::one();
        for t in &self.torsion {
            o *= t;
        }
        Some(o)
    }

    /// Exponent of the torsion part (the last invariant factor).
    pub fn exponent(&self) -> BigInt {
        self.torsion.last().cloned().unwrap_or_else(BigInt::one)
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut orders: Vec<BigInt> = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        let mut g = FinAbGroup::from_orders(&orders);
        g.free_rank = self.free_rank + other.free_rank;
        g
    }

    /// Multiset of exponents of `p` across the invariant factors.
    fn p_exponents(&self, p: &BigInt) -> Vec<u64> {
        let mut out = Vec::new();
        for t in &self.torsion {
            let mut e = 0u64;
            let mut t = t.clone();
            while (&t % p).is_zero() {
                e += 1;
                t /= p;
            }
            if e > 0 {
                out.push(e);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    fn torsion_primes(&self) -> Vec<BigInt> {
        let mut primes = Vec::new();
        for t in &self.torsion {
            let mut t = t.clone();
            let mut p = BigInt::from(2);
            while &p * &p <= t {
                if (&t % &p).is_zero() {
                    if !primes.contains(&p) {
                        primes.push(p.clone());
                    }
                    while (&t % &p).is_zero() {
                        t /= &p;
                    }
                }
                p += 1;
            }
            if t > BigInt::one() && !primes.contains(&t) {
                primes.push(t);
            }
        }
        primes
    }

    /// Does a surjection `other → self` exist?
    ///
    /// Checked prime by prime: writing the p-parts as descending exponent
    /// sequences, a surjection exists iff the source dominates the target
    /// componentwise, with surplus free rank acting as unbounded exponents.
    pub fn is_quotient_of(&self, other: &FinAbGroup) -> bool {
        if other.free_rank < self.free_rank {
            return false;
        }
        let surplus = other.free_rank - self.free_rank;
        for p in self.torsion_primes() {
            let need = self.p_exponents(&p);
            let have = other.p_exponents(&p);
            for (i, n) in need.iter().enumerate() {
                if i < surplus {
                    continue; // a free generator covers this factor
                }
                match have.get(i - surplus) {
                    Some(h) if h >= n => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// The p-primary part, as a canonical group.
    pub fn primary_part(&self, p: i64) -> FinAbGroup {
        let p = BigInt::from(p);
        let orders: Vec<BigInt> = self
            .p_exponents(&p)
            .into_iter()
            .map(|e| num_traits::pow::pow(p.clone(), e as usize))
            .collect();
        FinAbGroup::from_orders(&orders)
    }

    /// Tensor product over Z.
    pub fn tensor(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut orders: Vec<BigInt> = Vec::new();
        for m in &self.torsion {
            for n in &other.torsion {
                orders.push(m.gcd(n));
            }
        }
        // Z^a ⊗ T and T ⊗ Z^b contribute torsion copies
        for n in &other.torsion {
            for _ in 0..self.free_rank {
                orders.push(n.clone());
            }
        }
        for m in &self.torsion {
            for _ in 0..other.free_rank {
                orders.push(m.clone());
            }
        }
        let mut g = FinAbGroup::from_orders(&orders);
        g.free_rank = self.free_rank * other.free_rank;
        g
    }

    /// Tor₁ over Z: only torsion pairs contribute, by gcd.
    pub fn tor(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut orders: Vec<BigInt> = Vec::new();
        for m in &self.torsion {
            for n in &other.torsion {
                orders.push(m.gcd(n));
            }
        }
        FinAbGroup::from_orders(&orders)
    }

    /// Torsion orders as JSON-ready numbers (the report schema).
    pub fn torsion_i64(&self) -> Option<Vec<i64>> {
        self.torsion.iter().map(i64::try_from).collect::<std::result::Result<_, _>>().ok()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let mut j = i;
            while j + 1 < self.torsion.len() && self.torsion[j + 1] == self.torsion[i] {
                j += 1;
            }
            let count = j - i + 1;
            if count == 1 {
                parts.push(format!("Z/{}", self.torsion[i]));
            } else {
                parts.push(format!("(Z/{})^{}", self.torsion[i], count));
            }
            i = j + 1;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rebalancing() {
        let g = FinAbGroup::from_orders_i64(&[224, 24, 2]);
        assert_eq!(g.torsion(), &[BigInt::from(2), BigInt::from(8), BigInt::from(672)]);
        // equality is isomorphism
        assert_eq!(g, FinAbGroup::from_orders_i64(&[2, 8, 672]));
        assert_eq!(FinAbGroup::from_orders_i64(&[2, 3]), FinAbGroup::cyclic(6));
        assert_eq!(FinAbGroup::from_orders_i64(&[1, 1]), FinAbGroup::trivial());
    }

    #[test]
    fn quotient_dominance() {
        let h = FinAbGroup::from_orders_i64(&[28, 12, 2]);
        assert!(FinAbGroup::cyclic(4).is_quotient_of(&h));
        assert!(!FinAbGroup::cyclic(8).is_quotient_of(&h));
        assert!(FinAbGroup::trivial().is_quotient_of(&h));
        // (Z/2)^2 needs two factors with 2-torsion
        assert!(FinAbGroup::from_orders_i64(&[2, 2]).is_quotient_of(&h));
        assert!(!FinAbGroup::from_orders_i64(&[2, 2, 2, 2]).is_quotient_of(&h));
        // Z/4 is not a quotient of Z/2 + Z/2
        assert!(!FinAbGroup::cyclic(4).is_quotient_of(&FinAbGroup::from_orders_i64(&[2, 2])));
        // free rank covers anything
        assert!(FinAbGroup::cyclic(9).is_quotient_of(&FinAbGroup::free(1)));
        assert!(!FinAbGroup::free(2).is_quotient_of(&FinAbGroup::free(1)));
    }

    #[test]
    fn tensor_and_tor() {
        let a = FinAbGroup::from_orders_i64(&[4, 6]);
        let b = FinAbGroup::from_orders_i64(&[9]);
        assert_eq!(a.tensor(&b), FinAbGroup::cyclic(3));
        assert_eq!(a.tor(&b), FinAbGroup::cyclic(3));
        let f = FinAbGroup::free(2);
        assert_eq!(f.tensor(&b), FinAbGroup::from_orders_i64(&[9, 9]));
        assert_eq!(f.tor(&b), FinAbGroup::trivial());
    }

    #[test]
    fn display_groups_factors() {
        let g = FinAbGroup::from_orders_i64(&[2, 2, 4]);
        assert_eq!(g.to_string(), "(Z/2)^2 + Z/4");
        assert_eq!(FinAbGroup::trivial().to_string(), "0");
    }

    #[test]
    fn primary_parts() {
        let g = FinAbGroup::from_orders_i64(&[28, 12, 2]);
        assert_eq!(g.primary_part(2), FinAbGroup::from_orders_i64(&[4, 4, 2]));
        assert_eq!(g.primary_part(3), FinAbGroup::cyclic(3));
        assert_eq!(g.primary_part(7), FinAbGroup::cyclic(7));
        assert_eq!(g.primary_part(5), FinAbGroup::trivial());
    }
}
