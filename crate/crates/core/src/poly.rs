//! Multivariate polynomials with terms kept sorted by the ring's order.

use crate::field::Field;
use crate::monomial::Monomial;
use crate::ring::PolyRing;
use std::cmp::Ordering;

/// A polynomial over the field `F`. Terms are stored strictly descending in
/// the owning ring's monomial order and never contain zero coefficients; the
/// ring is passed to every operation rather than stored per value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading (monomial, coefficient) under the ring order.
    pub fn lead(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub(crate) fn from_sorted(terms: Vec<(Monomial, F::Elem)>) -> Self {
        Poly { terms }
    }

    /// Remove and return the leading term.
    pub(crate) fn pop_lead(&mut self) -> Option<(Monomial, F::Elem)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }
}

impl<F: Field> PolyRing<F> {
    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order().cmp(self.weights(), a, b)
    }

    /// Build a polynomial from arbitrary (monomial, coefficient) pairs:
    /// sorts, merges duplicates, drops zeros.
    pub fn poly_from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> Poly<F> {
        terms.sort_by(|(a, _), (b, _)| self.cmp_mono(b, a));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = self.field.add(lc, &c);
                    if self.field.is_zero(lc) {
                        out.pop();
                    }
                }
                _ => {
                    if !self.field.is_zero(&c) {
                        out.push((m, c));
                    }
                }
            }
        }
        Poly::from_sorted(out)
    }

    pub fn zero_poly(&self) -> Poly<F> {
        Poly::zero()
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F> {
        if self.field.is_zero(&c) {
            Poly::zero()
        } else {
            Poly::from_sorted(vec![(Monomial::one(self.nvars()), c)])
        }
    }

    pub fn one_poly(&self) -> Poly<F> {
        self.constant(self.field.one())
    }

    pub fn int_poly(&self, n: i64) -> Poly<F> {
        self.constant(self.field.from_i64(n))
    }

    pub fn var_poly(&self, i: usize) -> Poly<F> {
        Poly::from_sorted(vec![(Monomial::var(i, self.nvars()), self.field.one())])
    }

    pub fn monomial_poly(&self, m: Monomial) -> Poly<F> {
        Poly::from_sorted(vec![(m, self.field.one())])
    }

    /// The single-term polynomial c * m.
    pub fn term_poly(&self, m: &Monomial, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            Poly::zero()
        } else {
            Poly::from_sorted(vec![(m.clone(), c.clone())])
        }
    }

    pub fn add(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            match self.cmp_mono(&a.terms[i].0, &b.terms[j].0) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&a.terms[i].1, &b.terms[j].1);
                    if !self.field.is_zero(&c) {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        Poly::from_sorted(out)
    }

    pub fn neg(&self, a: &Poly<F>) -> Poly<F> {
        Poly::from_sorted(
            a.terms
                .iter()
                .map(|(m, c)| (m.clone(), self.field.neg(c)))
                .collect(),
        )
    }

    pub fn sub(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        self.add(a, &self.neg(b))
    }

    /// a * (c * m) for a single term.
    pub fn mul_term(&self, a: &Poly<F>, m: &Monomial, c: &F::Elem) -> Poly<F> {
        if self.field.is_zero(c) {
            return Poly::zero();
        }
        Poly::from_sorted(
            a.terms
                .iter()
                .map(|(am, ac)| (am.mul(m), self.field.mul(ac, c)))
                .collect(),
        )
    }

    pub fn scale(&self, a: &Poly<F>, c: &F::Elem) -> Poly<F> {
        self.mul_term(a, &Monomial::one(self.nvars()), c)
    }

    pub fn mul(&self, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut acc: Vec<(Monomial, F::Elem)> = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (am, ac) in &a.terms {
            for (bm, bc) in &b.terms {
                acc.push((am.mul(bm), self.field.mul(ac, bc)));
            }
        }
        self.poly_from_terms(acc)
    }

    pub fn pow(&self, a: &Poly<F>, n: u32) -> Poly<F> {
        let mut out = self.one_poly();
        for _ in 0..n {
            out = self.mul(&out, a);
        }
        out
    }

    /// Weighted degree of the highest-degree term (None for 0).
    pub fn degree(&self, a: &Poly<F>) -> Option<i64> {
        a.terms
            .iter()
            .map(|(m, _)| m.weighted_degree(self.weights()))
            .max()
    }

    /// True iff all terms share one weighted degree (0 is homogeneous).
    pub fn is_homogeneous_poly(&self, a: &Poly<F>) -> bool {
        let mut degs = a.terms.iter().map(|(m, _)| m.weighted_degree(self.weights()));
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// All monomials of the given weighted degree, descending in the order.
    pub fn monomials_of_degree(&self, d: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; self.nvars()];
        self.enumerate_rec(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| self.cmp_mono(b, a));
        out
    }

    fn enumerate_rec(&self, var: usize, remaining: i64, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if remaining < 0 {
            return;
        }
        if var == self.nvars() {
            if remaining == 0 {
                out.push(Monomial::from_exps(exps));
            }
            return;
        }
        let w = self.weights()[var] as i64;
        let max_e = remaining / w;
        for e in 0..=max_e {
            exps[var] = e as u32;
            self.enumerate_rec(var + 1, remaining - e * w, exps, out);
        }
        exps[var] = 0;
    }

    /// Random homogeneous polynomial of the given weighted degree. May be
    /// zero only if the degree supports no monomials.
    pub fn random_homogeneous<R: rand::Rng + ?Sized>(&self, degree: i64, rng: &mut R) -> Poly<F> {
        let monos = self.monomials_of_degree(degree);
        if monos.is_empty() {
            return Poly::zero();
        }
        loop {
            let terms: Vec<_> = monos
                .iter()
                .map(|m| (m.clone(), self.field.random(rng)))
                .collect();
            let p = self.poly_from_terms(terms);
            if !p.is_zero() {
                return p;
            }
        }
    }

    pub fn fmt_poly(&self, a: &Poly<F>) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in a.terms.iter().enumerate() {
            let cs = self.field.fmt_elem(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.fmt_mono(m);
            if mono.is_empty() {
                s.push_str(&mag);
            } else if mag == "1" {
                s.push_str(&mono);
            } else {
                s.push_str(&mag);
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }

    pub fn fmt_mono(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 1 {
                parts.push(self.vars()[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.vars()[i], e));
            }
        }
        parts.join("*")
    }
}
