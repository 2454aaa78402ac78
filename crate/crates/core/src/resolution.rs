//! Minimal graded free resolutions by iterated syzygies, syzygy modules,
//! Betti numbers, Tor, and the Tor/Artin-Rees cross-check.

use crate::complex::{tensor_homology, ChainComplex};
use crate::field::Field;
use crate::gb::{self, Vect};
use crate::ideal::Ideal;
use crate::module::{kernel_gens, minimal_generators, module_intersection, FreeModule, ModuleMap, Subquotient};
use crate::poly::Poly;
use crate::ring::RingRef;
use crate::{Error, Result};

/// A computed minimal graded free resolution of a subquotient.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    complex: ChainComplex<F>,
    resolved: Subquotient<F>,
    augmentation: ModuleMap<F>,
    length_requested: usize,
    minimal: bool,
}

impl<F: Field> Resolution<F> {
    pub fn complex(&self) -> &ChainComplex<F> {
        &self.complex
    }

    pub fn resolved(&self) -> &Subquotient<F> {
        &self.resolved
    }

    /// The chosen minimal generators, as the map F_0 → ambient(M).
    pub fn augmentation(&self) -> &ModuleMap<F> {
        &self.augmentation
    }

    /// Length to which the resolution was requested; the complex may stop
    /// earlier when a kernel vanishes.
    pub fn length_requested(&self) -> usize {
        self.length_requested
    }

    pub fn length(&self) -> usize {
        self.complex.length()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Ranks of the free modules (Betti numbers up to the computed length).
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.complex.ranks()
    }

    /// ∂_i of the resolution, None beyond the computed length.
    pub fn differential(&self, i: usize) -> Option<&ModuleMap<F>> {
        self.complex.differential(i)
    }

    /// Graded Betti layout: for each homological index, the sorted twists.
    pub fn graded_betti(&self) -> Vec<Vec<i64>> {
        self.complex
            .modules()
            .iter()
            .map(|m| {
                let mut t = m.twists().to_vec();
                t.sort();
                t
            })
            .collect()
    }
}

/// Minimal graded free resolution of M to the requested length (iterated
/// syzygies with minimal generator pruning at every step); deterministic
/// for fixed input.
pub fn free_resolution<F: Field>(m: &Subquotient<F>, length: usize) -> Result<Resolution<F>> {
    if length == 0 {
        return Err(Error::precondition("resolution length must be >= 1"));
    }
    let ring = m.ring().clone();
    let ar = ring.ambient();

    let mingens = m.pruned_generators();
    let twists: Vec<i64> = mingens
        .iter()
        .map(|v| m.ambient().vect_degree(v).unwrap_or(0))
        .collect();
    let f0 = FreeModule::new(ring.clone(), twists);
    let augmentation = ModuleMap::new(f0.clone(), m.ambient().clone(), mingens.clone())?;

    let mut modules = vec![f0];
    let mut diffs: Vec<ModuleMap<F>> = Vec::new();

    for step in 1..=length {
        let cur = modules.last().unwrap().clone();
        let kernel: Vec<Vect<F>> = if step == 1 {
            // kernel of F_0 → M: coefficients a with Σ a_j g_j in the
            // relation span
            let mut cols = mingens.clone();
            cols.extend(m.rels().iter().cloned());
            cols.extend(m.ambient().ring_relation_vects());
            let syz = gb::syzygies_of(ar, m.ambient().twists(), &cols);
            let g = mingens.len();
            let mut out: Vec<Vect<F>> = Vec::new();
            for s in syz {
                let v = Vect {
                    comps: s.comps[..g].iter().map(|p| ring.reduce(p)).collect(),
                };
                if !v.is_zero() && !out.contains(&v) {
                    out.push(v);
                }
            }
            out
        } else {
            kernel_gens(diffs.last().unwrap())
        };
        let pruned = minimal_generators(&cur, &kernel, &[]);
        if pruned.is_empty() {
            break;
        }
        let twists: Vec<i64> = pruned
            .iter()
            .map(|v| cur.vect_degree(v).unwrap_or(0))
            .collect();
        let next = FreeModule::new(ring.clone(), twists);
        let d = ModuleMap::new(next.clone(), cur, pruned)?;
        #[cfg(debug_assertions)]
        {
            for c in 0..d.source().rank() {
                for r in 0..d.target().rank() {
                    debug_assert!(
                        d.entry(r, c).lead().map(|(mn, _)| !mn.is_one()).unwrap_or(true),
                        "unit entry in a minimal resolution differential"
                    );
                }
            }
        }
        diffs.push(d);
        modules.push(next);
    }

    let complex = ChainComplex::new(modules, diffs)?;
    Ok(Resolution {
        complex,
        resolved: m.clone(),
        augmentation,
        length_requested: length,
        minimal: true,
    })
}

/// The i-th syzygy module Ω^i(M): M itself for i = 0 and the image of ∂_i
/// inside F_{i-1} for i ≥ 1 (zero once the minimal resolution has ended).
pub fn syzygy_module<F: Field>(m: &Subquotient<F>, i: usize) -> Result<Subquotient<F>> {
    if i == 0 {
        return Ok(m.clone());
    }
    let res = free_resolution(m, i)?;
    match res.differential(i) {
        None => Ok(Subquotient::zero(m.ring().clone())),
        Some(d) => Ok(Subquotient::submodule(
            d.target().clone(),
            d.cols().to_vec(),
        )),
    }
}

/// Tor_i(R/I, M) = H_i((free resolution of R/I) ⊗ M).
pub fn tor<F: Field>(i: usize, ideal: &Ideal<F>, m: &Subquotient<F>) -> Result<Subquotient<F>> {
    if !ideal.ring().same(m.ring()) {
        return Err(Error::ring_mismatch("Tor across different rings"));
    }
    let cyclic = Subquotient::cyclic(ideal);
    let res = free_resolution(&cyclic, i + 1)?;
    tensor_homology(res.complex(), m, i)
}

/// A degree window guaranteed to see every degree where the compared
/// modules can differ in the graded comparisons used here.
pub fn comparison_window<F: Field>(sides: &[&Subquotient<F>]) -> (i64, i64) {
    let mut lo = 0i64;
    let mut hi = 0i64;
    for s in sides {
        for t in s.ambient().twists() {
            lo = lo.min(*t);
            hi = hi.max(*t);
        }
        for v in s.gens().iter().chain(s.rels()) {
            if let Some(d) = s.ambient().vect_degree(v) {
                hi = hi.max(d);
            }
        }
        hi = hi.max(lo + s.ring().dimension() as i64);
    }
    (lo, hi + 2)
}

/// Compares (I^n F_{i-1} ∩ im ∂_i) / (I^n · im ∂_i) with Tor_i(R/I^n, M) by
/// Hilbert functions over a shared window (the implemented isomorphism
/// surrogate).
pub fn tor_uar_crosscheck<F: Field>(
    m: &Subquotient<F>,
    ideal: &Ideal<F>,
    i: usize,
    n: u32,
) -> Result<bool> {
    if i == 0 {
        return Err(Error::precondition("the isomorphism starts at i = 1"));
    }
    let ring = m.ring().clone();
    let ar = ring.ambient();
    let res = free_resolution(m, i)?;
    let lhs = match res.differential(i) {
        None => Subquotient::zero(ring.clone()),
        Some(d) => {
            let f_prev = d.target().clone();
            let power = ideal.power(n);
            // I^n F_{i-1}
            let mut pow_gens = Vec::new();
            for a in power.gens() {
                for r in 0..f_prev.rank() {
                    pow_gens.push(Vect::unit(f_prev.rank(), r, a.clone()));
                }
            }
            let pow_mod = Subquotient::submodule(f_prev.clone(), pow_gens);
            let image = Subquotient::submodule(f_prev.clone(), d.cols().to_vec());
            let numerator = module_intersection(&pow_mod, &image)?;
            // I^n · im ∂_i
            let mut den = Vec::new();
            for a in power.gens() {
                for col in d.cols() {
                    den.push(f_prev.reduce_vect_mod_ring(&gb::vect_scale_poly(ar, col, a)));
                }
            }
            Subquotient::new_unchecked(f_prev, numerator.gens().to_vec(), den)
        }
    };
    let rhs = tor(i, &ideal.power(n), m)?;
    let (lo, hi) = comparison_window(&[&lhs, &rhs]);
    Ok(lhs.hilbert_function(lo, hi)? == rhs.hilbert_function(lo, hi)?)
}

/// Ext^j(M, R) from a computed resolution: homology of the dualized complex.
pub fn ext_module<F: Field>(res: &Resolution<F>, j: usize) -> Result<Subquotient<F>> {
    let c = res.complex();
    let ring = c.ring().clone();
    if j > c.length() {
        return Ok(Subquotient::zero(ring));
    }
    let dual_j = FreeModule::new(
        ring.clone(),
        c.modules()[j].twists().iter().map(|t| -t).collect(),
    );
    let gens: Vec<Vect<F>> = if j < c.length() {
        let dt = c.differential(j + 1).unwrap().transpose();
        kernel_gens(&dt)
    } else {
        (0..dual_j.rank()).map(|k| dual_j.basis_vect(k)).collect()
    };
    let rels: Vec<Vect<F>> = if j >= 1 {
        c.differential(j).unwrap().transpose().cols().to_vec()
    } else {
        Vec::new()
    };
    Ok(Subquotient::new_unchecked(dual_j, gens, rels))
}

pub fn ext_is_zero<F: Field>(res: &Resolution<F>, j: usize) -> Result<bool> {
    Ok(ext_module(res, j)?.is_zero_module())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::buchsbaum_eisenbud_exact;
    use crate::field::Rationals;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_poly;
    use crate::ring::{PolyRing, QuotientRing};

    fn k_xy() -> RingRef<Rationals> {
        QuotientRing::polynomial_ring(
            PolyRing::new(Rationals, &["x", "y"], MonomialOrder::GrevLex, None).unwrap(),
        )
    }

    fn hypersurface_xy() -> RingRef<Rationals> {
        let ar = std::sync::Arc::new(
            PolyRing::new(Rationals, &["x", "y"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let xy = parse_poly(&ar, "x*y").unwrap();
        QuotientRing::make(ar, &[xy]).unwrap()
    }

    #[test]
    fn resolution_of_regular_sequence_quotient() {
        let r = k_xy();
        let m = Subquotient::cyclic(&Ideal::parse(&r, &["x", "y"]).unwrap());
        let res = free_resolution(&m, 3).unwrap();
        assert_eq!(res.betti_numbers(), vec![1, 2, 1]);
        assert!(res.is_minimal());
        assert!(buchsbaum_eisenbud_exact(res.complex()).unwrap().exact);
        assert_eq!(res.graded_betti(), vec![vec![0], vec![1, 1], vec![2]]);
    }

    #[test]
    fn resolution_of_x2_xy() {
        let r = k_xy();
        let m = Subquotient::cyclic(&Ideal::parse(&r, &["x^2", "x*y"]).unwrap());
        let res = free_resolution(&m, 3).unwrap();
        // 0 → R(-3) → R(-2)^2 → R
        assert_eq!(res.betti_numbers(), vec![1, 2, 1]);
        assert_eq!(res.graded_betti(), vec![vec![0], vec![2, 2], vec![3]]);
    }

    #[test]
    fn hypersurface_periodicity() {
        // R = k[x,y]/(xy), M = R/(x): Betti numbers 1,1,1,1,1
        let r = hypersurface_xy();
        let m = Subquotient::cyclic(&Ideal::parse(&r, &["x"]).unwrap());
        let res = free_resolution(&m, 4).unwrap();
        assert_eq!(res.betti_numbers(), vec![1, 1, 1, 1, 1]);
        // alternating x, y differentials
        let d1 = res.differential(1).unwrap();
        let d2 = res.differential(2).unwrap();
        let x = parse_poly(r.ambient(), "x").unwrap();
        let y = parse_poly(r.ambient(), "y").unwrap();
        assert_eq!(d1.entry(0, 0), &x);
        assert_eq!(d2.entry(0, 0), &y);
    }

    #[test]
    fn resolution_homology_vanishes_in_the_middle() {
        let r = k_xy();
        let i = Ideal::parse(&r, &["x^2", "x*y", "y^3"]).unwrap();
        let m = Subquotient::cyclic(&i);
        let res = free_resolution(&m, 3).unwrap();
        for idx in 1..res.length() {
            assert!(res.complex().homology_is_zero(idx));
        }
        // H_0 of the resolution matches M's Hilbert function
        let h0 = res.complex().homology(0);
        let (lo, hi) = comparison_window(&[&h0, &m]);
        assert_eq!(
            h0.hilbert_function(lo, hi).unwrap(),
            m.hilbert_function(lo, hi).unwrap()
        );
    }

    #[test]
    fn syzygy_module_examples() {
        let r = k_xy();
        let m = Subquotient::cyclic(&Ideal::parse(&r, &["x", "y"]).unwrap());
        // Ω^2 = im ∂_2 ≅ R(-2), rank-1 free inside F_1
        let s2 = syzygy_module(&m, 2).unwrap();
        assert_eq!(s2.gens().len(), 1);
        assert!(s2.is_submodule());
        // Ω^0 = M
        let s0 = syzygy_module(&m, 0).unwrap();
        assert_eq!(s0.gens().len(), m.gens().len());
        // beyond the length: zero
        let s3 = syzygy_module(&m, 3).unwrap();
        assert!(s3.is_zero_module());

        // periodicity over the hypersurface: Ω^2 of R/(x) is (y)R up to twist
        let rh = hypersurface_xy();
        let mh = Subquotient::cyclic(&Ideal::parse(&rh, &["x"]).unwrap());
        let s = syzygy_module(&mh, 2).unwrap();
        assert_eq!(s.gens().len(), 1);
        let ann = s.annihilator().unwrap();
        assert!(ann.equals(&Ideal::parse(&rh, &["x"]).unwrap()));
    }

    #[test]
    fn tor_examples() {
        // Tor_1(R/(x^2), R/(x^2)) over k[x]: total dimension 2
        let rx = QuotientRing::polynomial_ring(
            PolyRing::new(Rationals, &["x"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let i = Ideal::parse(&rx, &["x^2"]).unwrap();
        let m = Subquotient::cyclic(&i);
        let t = tor(1, &i, &m).unwrap();
        let (lo, hi) = comparison_window(&[&t]);
        assert_eq!(t.total_dimension(lo, hi).unwrap(), 2);

        // Tor_1(R/(x,y), R/(x,y)) over k[x,y]: dimension 2 in degree 1
        let r = k_xy();
        let mi = Ideal::parse(&r, &["x", "y"]).unwrap();
        let mm = Subquotient::cyclic(&mi);
        let t = tor(1, &mi, &mm).unwrap();
        assert_eq!(t.hilbert_function(0, 3).unwrap(), vec![0, 2, 0, 0]);

        // Tor_2(R/(x,y), R) = 0
        let free = Subquotient::free(FreeModule::standard(r.clone(), 1));
        let t = tor(2, &mi, &free).unwrap();
        assert!(t.is_zero_module());
    }

    #[test]
    fn tor_uar_crosscheck_examples() {
        let r = k_xy();
        let mi = Ideal::parse(&r, &["x", "y"]).unwrap();
        let m = Subquotient::cyclic(&mi);
        assert!(tor_uar_crosscheck(&m, &mi, 1, 1).unwrap());

        // free module: both sides zero
        let free = Subquotient::free(FreeModule::standard(r.clone(), 1));
        assert!(tor_uar_crosscheck(&free, &mi, 1, 2).unwrap());
        assert!(tor_uar_crosscheck(&free, &mi, 2, 1).unwrap());

        // over k[x]: M = R/(x^2), I = (x), i = 1, n = 2
        let rx = QuotientRing::polynomial_ring(
            PolyRing::new(Rationals, &["x"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let i2 = Ideal::parse(&rx, &["x^2"]).unwrap();
        let m2 = Subquotient::cyclic(&i2);
        let ix = Ideal::parse(&rx, &["x"]).unwrap();
        assert!(tor_uar_crosscheck(&m2, &ix, 1, 2).unwrap());
    }

    #[test]
    fn ext_of_cyclic_module() {
        // S = k[x,y], R = S/(x^2, xy): Ext^2_S(R, S) has annihilator (x, y)
        let r = k_xy();
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let m = Subquotient::cyclic(&i);
        let res = free_resolution(&m, 3).unwrap();
        assert!(ext_is_zero(&res, 0).unwrap()); // Hom(R/I, S) = 0
        let e2 = ext_module(&res, 2).unwrap();
        assert!(!e2.is_zero_module());
        let ann = e2.annihilator().unwrap();
        assert!(ann.equals(&Ideal::parse(&r, &["x", "y"]).unwrap()));
    }
}
