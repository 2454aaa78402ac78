//! Polynomial rings, gradings, and quotient rings with normal forms.

use crate::field::Field;
use crate::gb;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;
use crate::{Error, Result};
use std::sync::Arc;

/// A multivariate polynomial ring: named variables, a global monomial order,
/// and a positive integer weight per variable (all 1 by default).
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    pub field: F,
    vars: Vec<String>,
    order: MonomialOrder,
    weights: Vec<u32>,
}

impl<F: Field> PolyRing<F> {
    pub fn new<S: AsRef<str>>(
        field: F,
        vars: &[S],
        order: MonomialOrder,
        weights: Option<&[u32]>,
    ) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars.is_empty() {
            return Err(Error::precondition("a ring needs at least one variable"));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || !v.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(Error::precondition(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::precondition(format!("duplicate variable {v:?}")));
            }
        }
        let weights = match weights {
            Some(w) => {
                if w.len() != vars.len() {
                    return Err(Error::precondition("weight count != variable count"));
                }
                if w.iter().any(|&x| x == 0) {
                    return Err(Error::precondition("weights must be positive"));
                }
                w.to_vec()
            }
            None => vec![1; vars.len()],
        };
        if let MonomialOrder::Block(k) = order {
            if k == 0 || k >= vars.len() {
                return Err(Error::precondition("block size out of range"));
            }
        }
        Ok(PolyRing {
            field,
            vars,
            order,
            weights,
        })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        self.field == other.field
            && self.vars == other.vars
            && self.order == other.order
            && self.weights == other.weights
    }

    /// The same ring with one auxiliary variable prepended and a block order
    /// eliminating it; used for intersections and similar elimination tasks.
    pub fn with_elimination_var(&self) -> PolyRing<F> {
        let mut vars = vec!["@t".to_string()];
        vars.extend(self.vars.iter().cloned());
        let mut weights = vec![1u32];
        weights.extend_from_slice(&self.weights);
        PolyRing {
            field: self.field.clone(),
            vars,
            order: MonomialOrder::Block(1),
            weights,
        }
    }
}

/// Shared handle to a quotient ring; everything downstream hangs onto one.
pub type RingRef<F> = Arc<QuotientRing<F>>;

/// A graded quotient `ambient / (defining)`, where `defining` is kept as a
/// reduced Groebner basis of a homogeneous ideal (possibly empty, in which
/// case this *is* the polynomial ring). The Krull dimension is cached.
#[derive(Clone, Debug)]
pub struct QuotientRing<F: Field> {
    ambient: Arc<PolyRing<F>>,
    defining: Vec<Poly<F>>,
    dim: usize,
}

impl<F: Field> QuotientRing<F> {
    /// The polynomial ring itself (empty defining ideal).
    pub fn polynomial_ring(ambient: PolyRing<F>) -> RingRef<F> {
        Self::polynomial_ring_arc(Arc::new(ambient))
    }

    pub fn polynomial_ring_arc(ambient: Arc<PolyRing<F>>) -> RingRef<F> {
        let n = ambient.nvars();
        Arc::new(QuotientRing {
            ambient,
            defining: Vec::new(),
            dim: n,
        })
    }

    /// Quotient by the homogeneous ideal generated by `gens`. The defining
    /// basis is auto-reduced; the dimension comes from its initial ideal.
    pub fn make(ambient: Arc<PolyRing<F>>, gens: &[Poly<F>]) -> Result<RingRef<F>> {
        for g in gens {
            if !ambient.is_homogeneous_poly(g) {
                return Err(Error::NotHomogeneous(format!(
                    "defining generator {} is not homogeneous",
                    ambient.fmt_poly(g)
                )));
            }
        }
        let defining = gb::reduced_ideal_gb(&ambient, gens);
        if defining.iter().any(|p| p.lead().map(|(m, _)| m.is_one()) == Some(true)) {
            return Err(Error::precondition("defining ideal is the unit ideal"));
        }
        let dim = dim_from_lead_monomials(
            ambient.nvars(),
            &defining
                .iter()
                .filter_map(|p| p.lead().map(|(m, _)| m.clone()))
                .collect::<Vec<_>>(),
        );
        debug_assert!(dim >= 0);
        Ok(Arc::new(QuotientRing {
            ambient,
            defining,
            dim: dim as usize,
        }))
    }

    pub fn ambient(&self) -> &Arc<PolyRing<F>> {
        &self.ambient
    }

    pub fn defining(&self) -> &[Poly<F>] {
        &self.defining
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.defining.is_empty()
    }

    /// Cached Krull dimension of the quotient.
    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    pub fn field(&self) -> &F {
        &self.ambient.field
    }

    pub fn same(&self, other: &Self) -> bool {
        self.ambient.same_ring(&other.ambient) && self.defining == other.defining
    }

    /// Unique remainder of `f` modulo the reduced defining basis; idempotent.
    pub fn normal_form(&self, f: &Poly<F>) -> Result<Poly<F>> {
        if let Some((m, _)) = f.lead() {
            if m.nvars() != self.nvars() {
                return Err(Error::ring_mismatch(format!(
                    "polynomial has {} variables, ring has {}",
                    m.nvars(),
                    self.nvars()
                )));
            }
        }
        Ok(self.reduce(f))
    }

    /// Internal unchecked normal form.
    pub(crate) fn reduce(&self, f: &Poly<F>) -> Poly<F> {
        if self.defining.is_empty() {
            return f.clone();
        }
        gb::reduce_poly(&self.ambient, &self.defining, f)
    }

    pub fn is_zero_mod(&self, f: &Poly<F>) -> bool {
        self.reduce(f).is_zero()
    }

    /// True iff all terms of the normal form share one weighted degree.
    pub fn is_homogeneous(&self, f: &Poly<F>) -> bool {
        self.ambient.is_homogeneous_poly(&self.reduce(f))
    }

    pub fn fmt_poly(&self, f: &Poly<F>) -> String {
        self.ambient.fmt_poly(f)
    }
}

/// Krull dimension of `k[x_1..x_n] / (monomial ideal)`: the largest size of a
/// variable subset U meeting the support of no generator, or -1 for the unit
/// ideal. Works on the initial ideal's lead monomials.
pub(crate) fn dim_from_lead_monomials(nvars: usize, leads: &[Monomial]) -> i64 {
    if leads.iter().any(|m| m.is_one()) {
        return -1;
    }
    let mut best: i64 = 0;
    // nvars is small everywhere in this crate; enumerate subsets directly.
    for mask in 0u32..(1u32 << nvars) {
        let size = mask.count_ones() as i64;
        if size <= best {
            continue;
        }
        let independent = leads
            .iter()
            .all(|m| m.support().any(|v| mask & (1 << v) == 0));
        if independent {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn pring() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, &["x", "y"], MonomialOrder::GrevLex, None).unwrap()
    }

    #[test]
    fn polynomial_ring_dimension() {
        let r = QuotientRing::polynomial_ring(pring());
        assert_eq!(r.dimension(), 2);
        assert!(r.is_polynomial_ring());
    }

    #[test]
    fn hypersurface_dimension() {
        let ar = Arc::new(pring());
        let xy = ar.mul(&ar.var_poly(0), &ar.var_poly(1));
        let r = QuotientRing::make(ar, &[xy]).unwrap();
        assert_eq!(r.dimension(), 1);
    }

    #[test]
    fn non_homogeneous_generator_rejected() {
        let ar = Arc::new(pring());
        let f = ar.add(&ar.var_poly(0), &ar.one_poly());
        let err = QuotientRing::make(ar, &[f]).unwrap_err();
        assert!(err.to_string().contains("x + 1"));
    }

    #[test]
    fn normal_form_idempotent_and_linear() {
        let ar = Arc::new(pring());
        let x = ar.var_poly(0);
        let y = ar.var_poly(1);
        let x2 = ar.mul(&x, &x);
        let xy = ar.mul(&x, &y);
        let r = QuotientRing::make(ar.clone(), &[x2.clone(), xy]).unwrap();
        // x^2 -> 0
        assert!(r.is_zero_mod(&x2));
        // y^3 untouched
        let y3 = ar.pow(&y, 3);
        assert_eq!(r.normal_form(&y3).unwrap(), y3);
        // x^2 + y -> y
        let f = ar.add(&x2, &y);
        assert_eq!(r.normal_form(&f).unwrap(), y);
        let nf = r.normal_form(&f).unwrap();
        assert_eq!(r.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn radical_drop_dimension() {
        // (x^2, xy) has radical (x): dimension 1
        let ar = Arc::new(pring());
        let x = ar.var_poly(0);
        let y = ar.var_poly(1);
        let r = QuotientRing::make(ar.clone(), &[ar.mul(&x, &x), ar.mul(&x, &y)]).unwrap();
        assert_eq!(r.dimension(), 1);
    }
}
