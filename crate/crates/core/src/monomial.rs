//! Monomials (exponent vectors) and monomial orders.

use smallvec::SmallVec;
use std::cmp::Ordering;

pub type Exponents = SmallVec<[u32; 6]>;

/// A monomial in a fixed number of variables, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: std::iter::repeat(0).take(nvars).collect(),
        }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        Monomial {
            exps: exps.iter().copied().collect(),
        }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Unweighted total degree.
    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> i64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self, when self divides other.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial {
                exps: other
                    .exps
                    .iter()
                    .zip(&self.exps)
                    .map(|(b, a)| b - a)
                    .collect(),
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|a| a * n).collect(),
        }
    }

    /// Variable indices with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

/// A global monomial order, always refining (weighted) divisibility.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    /// Weighted degree, ties broken reverse-lexicographically.
    GrevLex,
    /// Pure lexicographic.
    Lex,
    /// Elimination order for the first `k` variables: grevlex on the leading
    /// block, then grevlex on the rest.
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, weights: &[u32], a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => grevlex(weights, a.exps(), b.exps()),
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::Block(k) => {
                grevlex(&weights[..k], &a.exps()[..k], &b.exps()[..k])
                    .then_with(|| grevlex(&weights[k..], &a.exps()[k..], &b.exps()[k..]))
            }
        }
    }
}

fn grevlex(weights: &[u32], a: &[u32], b: &[u32]) -> Ordering {
    let wa: i64 = a.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum();
    let wb: i64 = b.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum();
    wa.cmp(&wb)
        .then_with(|| {
            let ta: u32 = a.iter().sum();
            let tb: u32 = b.iter().sum();
            ta.cmp(&tb)
        })
        .then_with(|| {
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    // larger exponent in the last differing place is smaller
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        })
}
