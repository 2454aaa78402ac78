//! Ideal arithmetic: Groebner bases, membership, intersection, colon,
//! saturation, powers, Krull dimension, and Hilbert functions.
//!
//! An ideal lives in a quotient ring R = S/Q; internally every computation
//! happens in the ambient ring S on the combined generating set (generators
//! plus the defining basis), which is the standard lift.

use crate::field::Field;
use crate::gb::{self, Vect};
use crate::monomial::Monomial;
use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::ring::{dim_from_lead_monomials, RingRef};
use crate::{Error, Result};
use std::sync::OnceLock;

/// A finitely generated ideal of a quotient ring, with a lazily computed
/// reduced Groebner basis (of the lifted ideal, defining basis included).
#[derive(Debug)]
pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    gens: Vec<Poly<F>>,
    combined_gb: OnceLock<Vec<Poly<F>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let c = Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            combined_gb: OnceLock::new(),
        };
        if let Some(gb) = self.combined_gb.get() {
            let _ = c.combined_gb.set(gb.clone());
        }
        c
    }
}

impl<F: Field> Ideal<F> {
    /// Generators are brought to normal form; zero generators are dropped.
    pub fn new(ring: RingRef<F>, gens: Vec<Poly<F>>) -> Self {
        let gens = gens
            .iter()
            .map(|g| ring.reduce(g))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal {
            ring,
            gens,
            combined_gb: OnceLock::new(),
        }
    }

    pub fn parse(ring: &RingRef<F>, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| parse_poly(ring.ambient(), s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring.clone(), polys))
    }

    pub fn zero(ring: RingRef<F>) -> Self {
        Ideal::new(ring, Vec::new())
    }

    /// The irrelevant maximal ideal m = (all variables).
    pub fn maximal(ring: RingRef<F>) -> Self {
        let vars: Vec<Poly<F>> = (0..ring.nvars())
            .map(|i| ring.ambient().var_poly(i))
            .collect();
        Ideal::new(ring, vars)
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Groebner basis of the lifted ideal (generators + defining),
    /// computed once. This is the working basis for every normal form.
    pub fn combined_gb(&self) -> &[Poly<F>] {
        self.combined_gb.get_or_init(|| {
            let mut all = self.gens.clone();
            all.extend_from_slice(self.ring.defining());
            gb::reduced_ideal_gb(self.ring.ambient(), &all)
        })
    }

    /// The reduced Groebner basis of the ideal as seen in R: the combined
    /// basis minus elements that vanish modulo the defining ideal.
    pub fn groebner_basis(&self) -> Vec<Poly<F>> {
        self.combined_gb()
            .iter()
            .filter(|g| !self.ring.is_zero_mod(g))
            .cloned()
            .collect()
    }

    pub fn normal_form(&self, f: &Poly<F>) -> Poly<F> {
        gb::reduce_poly(self.ring.ambient(), self.combined_gb(), f)
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Membership with a ring check, the public `f ∈ I` test.
    pub fn membership(&self, f: &Poly<F>, ring: &RingRef<F>) -> Result<bool> {
        if !self.ring.same(ring) {
            return Err(Error::ring_mismatch("membership across different rings"));
        }
        Ok(self.contains(f))
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.combined_gb()
            .iter()
            .any(|g| g.lead().map(|(m, _)| m.is_one()) == Some(true))
    }

    /// Ideal equality via canonical reduced bases.
    pub fn equals(&self, other: &Ideal<F>) -> bool {
        self.ring.same(&other.ring) && self.combined_gb() == other.combined_gb()
    }

    pub fn is_subset_of(&self, other: &Ideal<F>) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        let ar = self.ring.ambient();
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(ar.mul(f, g));
            }
        }
        Ideal::new(self.ring.clone(), gens)
    }

    /// I^n, generated by all n-fold products of the generators; I^0 = R and
    /// I^1 = I.
    pub fn power(&self, n: u32) -> Ideal<F> {
        let ar = self.ring.ambient();
        if n == 0 {
            return Ideal::new(self.ring.clone(), vec![ar.one_poly()]);
        }
        if self.gens.is_empty() {
            return Ideal::zero(self.ring.clone());
        }
        // multisets of size n over the generators
        let mut gens: Vec<Poly<F>> = Vec::new();
        let mut stack: Vec<(usize, u32, Poly<F>)> = vec![(0, n, ar.one_poly())];
        while let Some((idx, left, acc)) = stack.pop() {
            if left == 0 {
                gens.push(acc);
                continue;
            }
            if idx + 1 == self.gens.len() {
                let mut p = acc;
                for _ in 0..left {
                    p = ar.mul(&p, &self.gens[idx]);
                }
                gens.push(p);
                continue;
            }
            for take in 0..=left {
                let mut p = acc.clone();
                for _ in 0..take {
                    p = ar.mul(&p, &self.gens[idx]);
                }
                stack.push((idx + 1, left - take, p));
            }
        }
        Ideal::new(self.ring.clone(), gens)
    }

    /// I ∩ J by elimination with one auxiliary variable.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        if !self.ring.same(&other.ring) {
            return Err(Error::ring_mismatch("intersection across different rings"));
        }
        let ar = self.ring.ambient();
        let ext = ar.with_elimination_var();
        let t = ext.var_poly(0);
        let one_minus_t = ext.sub(&ext.one_poly(), &t);

        let embed = |p: &Poly<F>| -> Poly<F> {
            ext.poly_from_terms(
                p.terms()
                    .iter()
                    .map(|(m, c)| {
                        let mut e = vec![0u32];
                        e.extend_from_slice(m.exps());
                        (Monomial::from_exps(&e), c.clone())
                    })
                    .collect(),
            )
        };

        let mut gens = Vec::new();
        for f in self.gens.iter().chain(self.ring.defining()) {
            gens.push(ext.mul(&t, &embed(f)));
        }
        for g in other.gens.iter().chain(self.ring.defining()) {
            gens.push(ext.mul(&one_minus_t, &embed(g)));
        }
        let egb = gb::reduced_ideal_gb(&ext, &gens);

        let mut out = Vec::new();
        for p in &egb {
            if p.terms().iter().all(|(m, _)| m.exps()[0] == 0) {
                out.push(ar.poly_from_terms(
                    p.terms()
                        .iter()
                        .map(|(m, c)| (Monomial::from_exps(&m.exps()[1..]), c.clone()))
                        .collect(),
                ));
            }
        }
        Ok(Ideal::new(self.ring.clone(), out))
    }

    /// The colon ideal (I : f) = { g | g·f ∈ I }, via syzygies.
    pub fn quotient(&self, f: &Poly<F>) -> Result<Ideal<F>> {
        let fr = self.ring.reduce(f);
        if fr.is_zero() {
            return Err(Error::precondition("colon by zero"));
        }
        let ar = self.ring.ambient();
        let mut cols: Vec<Vect<F>> = vec![Vect::from_poly(fr)];
        for g in self.gens.iter().chain(self.ring.defining()) {
            cols.push(Vect::from_poly(g.clone()));
        }
        let syz = gb::syzygies_of(ar, &[0], &cols);
        let gens: Vec<Poly<F>> = syz
            .into_iter()
            .map(|s| s.comps.into_iter().next().unwrap())
            .collect();
        Ok(Ideal::new(self.ring.clone(), gens))
    }

    /// (I : f^∞): iterate the single colon until the basis stabilizes.
    pub fn saturation(&self, f: &Poly<F>) -> Result<Ideal<F>> {
        let mut cur = self.quotient(f)?;
        loop {
            let next = cur.quotient(f)?;
            if next.equals(&cur) {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Annihilator of the ideal: (0 : I) = ∩ (0 : g) over generators.
    pub fn annihilator_of(&self) -> Result<Ideal<F>> {
        let zero = Ideal::zero(self.ring.clone());
        let mut acc: Option<Ideal<F>> = None;
        for g in &self.gens {
            let colon = zero.quotient(g)?;
            acc = Some(match acc {
                None => colon,
                Some(a) => a.intersect(&colon)?,
            });
        }
        // (0 : 0-ideal) = R
        Ok(acc.unwrap_or_else(|| {
            Ideal::new(self.ring.clone(), vec![self.ring.ambient().one_poly()])
        }))
    }

    /// Krull dimension of R/I from the initial ideal (maximal independent
    /// variable subset); -1 for the unit ideal.
    pub fn krull_dimension(&self) -> Result<i64> {
        for g in &self.gens {
            if !self.ring.ambient().is_homogeneous_poly(g) {
                return Err(Error::NotHomogeneous(format!(
                    "dimension needs a homogeneous ideal, generator {} is not",
                    self.ring.fmt_poly(g)
                )));
            }
        }
        let leads: Vec<Monomial> = self
            .combined_gb()
            .iter()
            .filter_map(|p| p.lead().map(|(m, _)| m.clone()))
            .collect();
        Ok(dim_from_lead_monomials(self.ring.nvars(), &leads))
    }

    /// dim_k (R/I)_e for each degree e in the window, counted as standard
    /// monomials of the initial ideal.
    pub fn hilbert_function(&self, lo: i64, hi: i64) -> Result<Vec<u64>> {
        for g in &self.gens {
            if !self.ring.ambient().is_homogeneous_poly(g) {
                return Err(Error::NotHomogeneous(
                    "Hilbert function needs a homogeneous ideal".into(),
                ));
            }
        }
        let ar = self.ring.ambient();
        let leads: Vec<Monomial> = self
            .combined_gb()
            .iter()
            .filter_map(|p| p.lead().map(|(m, _)| m.clone()))
            .collect();
        let mut out = Vec::new();
        for e in lo..=hi {
            let count = ar
                .monomials_of_degree(e)
                .into_iter()
                .filter(|m| !leads.iter().any(|l| l.divides(m)))
                .count() as u64;
            out.push(count);
        }
        Ok(out)
    }

    /// A random homogeneous element of the ideal of the given degree: a
    /// random homogeneous combination of the generators.
    pub fn random_element_of_degree<R: rand::Rng + ?Sized>(
        &self,
        degree: i64,
        rng: &mut R,
    ) -> Poly<F> {
        let ar = self.ring.ambient();
        let mut acc = ar.zero_poly();
        for g in &self.gens {
            let Some(d) = ar.degree(g) else { continue };
            if d > degree || !ar.is_homogeneous_poly(g) {
                continue;
            }
            let coeff = if d == degree {
                ar.constant(ar.field.random(rng))
            } else {
                let monos = ar.monomials_of_degree(degree - d);
                ar.poly_from_terms(
                    monos
                        .into_iter()
                        .map(|m| (m, ar.field.random(rng)))
                        .collect(),
                )
            };
            acc = ar.add(&acc, &ar.mul(&coeff, g));
        }
        self.ring.reduce(&acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::MonomialOrder;
    use crate::ring::{PolyRing, QuotientRing};

    fn k_xy() -> RingRef<Rationals> {
        QuotientRing::polynomial_ring(
            PolyRing::new(Rationals, &["x", "y"], MonomialOrder::GrevLex, None).unwrap(),
        )
    }

    #[test]
    fn groebner_basis_examples() {
        let r = k_xy();
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let gb: Vec<String> = i.groebner_basis().iter().map(|p| r.fmt_poly(p)).collect();
        assert_eq!(gb, vec!["x^2", "x*y"]);

        let i = Ideal::parse(&r, &["x^2 + y^2", "x*y"]).unwrap();
        let gb: Vec<String> = i.groebner_basis().iter().map(|p| r.fmt_poly(p)).collect();
        assert_eq!(gb, vec!["x^2 + y^2", "x*y", "y^3"]);

        let i = Ideal::parse(&r, &["x"]).unwrap();
        assert_eq!(i.groebner_basis().len(), 1);
    }

    #[test]
    fn membership_examples() {
        let r = k_xy();
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let ar = r.ambient();
        assert!(i.contains(&parse_poly(ar, "x^2*y").unwrap()));
        assert!(!i.contains(&parse_poly(ar, "y").unwrap()));
        assert!(i.contains(&parse_poly(ar, "x^2 + x*y").unwrap()));
    }

    #[test]
    fn intersection_examples() {
        let r = k_xy();
        let ix = Ideal::parse(&r, &["x"]).unwrap();
        let iy = Ideal::parse(&r, &["y"]).unwrap();
        let meet = ix.intersect(&iy).unwrap();
        assert!(meet.equals(&Ideal::parse(&r, &["x*y"]).unwrap()));

        // (x,y)^2 ∩ (x) = (x^2, xy)
        let m2 = Ideal::parse(&r, &["x", "y"]).unwrap().power(2);
        let meet = m2.intersect(&ix).unwrap();
        assert!(meet.equals(&Ideal::parse(&r, &["x^2", "x*y"]).unwrap()));

        // idempotence
        let i = Ideal::parse(&r, &["x^2 + y^2", "x*y"]).unwrap();
        assert!(i.intersect(&i).unwrap().equals(&i));
    }

    #[test]
    fn colon_and_saturation_examples() {
        let r = k_xy();
        let ar = r.ambient();
        let y = parse_poly(ar, "y").unwrap();
        let x = parse_poly(ar, "x").unwrap();

        let i = Ideal::parse(&r, &["x^2*y"]).unwrap();
        let q = i.quotient(&y).unwrap();
        assert!(q.equals(&Ideal::parse(&r, &["x^2"]).unwrap()));
        let s = i.saturation(&y).unwrap();
        assert!(s.equals(&Ideal::parse(&r, &["x^2"]).unwrap()));

        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let q = i.quotient(&x).unwrap();
        assert!(q.equals(&Ideal::parse(&r, &["x", "y"]).unwrap()));

        assert!(i.quotient(&ar.zero_poly()).is_err());
    }

    #[test]
    fn colon_times_f_contained() {
        let r = k_xy();
        let ar = r.ambient();
        let i = Ideal::parse(&r, &["x^2", "x*y^2"]).unwrap();
        let f = parse_poly(ar, "x + y").unwrap();
        let q = i.quotient(&f).unwrap();
        for g in q.gens() {
            assert!(i.contains(&ar.mul(g, &f)));
        }
    }

    #[test]
    fn dimension_examples() {
        let r = k_xy();
        assert_eq!(
            Ideal::parse(&r, &["x*y"]).unwrap().krull_dimension().unwrap(),
            1
        );
        assert_eq!(
            Ideal::parse(&r, &["x", "y"]).unwrap().krull_dimension().unwrap(),
            0
        );
        assert_eq!(
            Ideal::parse(&r, &["x^2", "x*y"]).unwrap().krull_dimension().unwrap(),
            1
        );
        assert_eq!(Ideal::zero(r.clone()).krull_dimension().unwrap(), 2);
    }

    #[test]
    fn power_examples() {
        let r = k_xy();
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        let m2 = m.power(2);
        assert!(m2.equals(&Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap()));
        let px = Ideal::parse(&r, &["x"]).unwrap().power(3);
        assert!(px.equals(&Ideal::parse(&r, &["x^3"]).unwrap()));
        let i = Ideal::parse(&r, &["x^2", "y^2"]).unwrap().power(2);
        assert!(i.equals(&Ideal::parse(&r, &["x^4", "x^2*y^2", "y^4"]).unwrap()));
    }

    #[test]
    fn hilbert_function_examples() {
        let r = k_xy();
        let m2 = Ideal::parse(&r, &["x", "y"]).unwrap().power(2);
        assert_eq!(m2.hilbert_function(0, 3).unwrap(), vec![1, 2, 0, 0]);
        assert_eq!(
            Ideal::zero(r.clone()).hilbert_function(0, 2).unwrap(),
            vec![1, 2, 3]
        );
        let ixy = Ideal::parse(&r, &["x*y"]).unwrap();
        assert_eq!(ixy.hilbert_function(0, 3).unwrap(), vec![1, 2, 2, 2]);
    }

    #[test]
    fn quotient_ring_membership() {
        // in R = k[x,y]/(x^2, xy): the ideal (y) contains xy (= 0) and y^2
        let ar = std::sync::Arc::new(
            PolyRing::new(Rationals, &["x", "y"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let x2 = parse_poly(&ar, "x^2").unwrap();
        let xy = parse_poly(&ar, "x*y").unwrap();
        let r = QuotientRing::make(ar.clone(), &[x2, xy.clone()]).unwrap();
        let iy = Ideal::parse(&r, &["y"]).unwrap();
        assert!(iy.contains(&xy));
        assert!(iy.contains(&parse_poly(&ar, "y^2").unwrap()));
        assert!(!iy.contains(&parse_poly(&ar, "x").unwrap()));
    }

    #[test]
    fn annihilator_in_quotient() {
        // R = k[x,y]/(xy): (0 : y) = (x)
        let ar = std::sync::Arc::new(
            PolyRing::new(Rationals, &["x", "y"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let xy = parse_poly(&ar, "x*y").unwrap();
        let r = QuotientRing::make(ar.clone(), &[xy]).unwrap();
        let ann = Ideal::parse(&r, &["y"]).unwrap().annihilator_of().unwrap();
        assert!(ann.equals(&Ideal::parse(&r, &["x"]).unwrap()));
    }
}
