//! Window-certified Artin-Rees numbers, syzygetic Artin-Rees numbers,
//! reduction numbers, uniform sweeps, and the main-reduction containment
//! checker.
//!
//! Every reported h is certified over the finite window n ≤ n_max only; the
//! classical statements quantify over all n ≥ h, which a desk experiment
//! cannot check.

use crate::field::Field;
use crate::gb::{self, Vect};
use crate::ideal::Ideal;
use crate::module::{in_span_gb, module_intersection, span_gb, FreeModule, Subquotient};
use crate::poly::Poly;
use crate::resolution::{free_resolution, Resolution};
use crate::{Error, Result};

/// Per-degree record kept for the reported Artin-Rees number.
#[derive(Clone, Debug)]
pub struct ArWitness {
    pub n: u32,
    /// generators of I^n·B ∩ A found at this degree
    pub intersection_gens: usize,
    /// a generator of I^n·B ∩ A that fails the containment at h-1 (present
    /// only when h ≥ 1 and this n witnesses the minimality of h)
    pub minimality_witness: Option<String>,
}

/// The outcome of one Artin-Rees computation over a window.
#[derive(Clone, Debug)]
pub struct ArResult {
    pub pair: String,
    pub n_max: u32,
    /// smallest h with I^n·B ∩ A ⊆ I^(n-h)·A for all h ≤ n ≤ n_max; None
    /// means no h ≤ n_max works ("unbounded in window")
    pub h_weak: Option<u32>,
    /// smallest h with I^n·B ∩ A = I^(n-h)(I^h·B ∩ A) over the window
    pub h_strong: Option<u32>,
    pub witnesses: Vec<ArWitness>,
}

/// Weak and strong Artin-Rees numbers of A ⊆ B with respect to I, certified
/// for n ≤ n_max.
pub fn artin_rees_number<F: Field>(
    a: &Subquotient<F>,
    b: &Subquotient<F>,
    ideal: &Ideal<F>,
    n_max: u32,
    pair_label: &str,
) -> Result<ArResult> {
    if n_max == 0 {
        return Err(Error::precondition("window must have n_max >= 1"));
    }
    if !a.is_submodule() || !b.is_submodule() {
        return Err(Error::precondition("Artin-Rees expects submodules"));
    }
    if !a.ambient().same(b.ambient()) {
        return Err(Error::ring_mismatch("A and B live in different modules"));
    }
    let fm = a.ambient().clone();
    let ar = fm.ring().ambient();
    // A ⊆ B
    let b_span = span_gb(&fm, b.gens());
    for g in a.gens() {
        if !in_span_gb(&fm, &b_span, g) {
            return Err(Error::precondition(format!(
                "A is not contained in B: generator {}",
                fm.fmt_vect(g)
            )));
        }
    }

    let powers: Vec<Ideal<F>> = (0..=n_max).map(|k| ideal.power(k)).collect();
    let scale_span = |target: &Subquotient<F>, k: usize| -> Vec<Vect<F>> {
        let mut out = Vec::new();
        for p in powers[k].gens() {
            for g in target.gens() {
                let v = fm.reduce_vect_mod_ring(&gb::vect_scale_poly(ar, g, p));
                if !v.is_zero() {
                    out.push(v);
                }
            }
        }
        out
    };

    // L_n = I^n·B ∩ A for 1 ≤ n ≤ n_max (L_0 = A)
    let mut intersections: Vec<Vec<Vect<F>>> = vec![a.gens().to_vec()];
    for n in 1..=n_max {
        let inb = Subquotient::submodule(fm.clone(), scale_span(b, n as usize));
        let meet = module_intersection(&inb, a)?;
        intersections.push(meet.gens().to_vec());
    }
    // span GBs of I^k·A for the weak test
    let ika_gb: Vec<Vec<Vect<F>>> = (0..=n_max)
        .map(|k| span_gb(&fm, &scale_span(a, k as usize)))
        .collect();

    let weak_holds = |h: u32| -> bool {
        (h.max(1)..=n_max).all(|n| {
            intersections[n as usize]
                .iter()
                .all(|v| in_span_gb(&fm, &ika_gb[(n - h) as usize], v))
        })
    };
    let h_weak = (0..=n_max).find(|&h| weak_holds(h));

    let strong_holds = |h: u32| -> Result<bool> {
        for n in h.max(1)..=n_max {
            // I^(n-h) · (I^h B ∩ A)
            let lh = Subquotient::submodule(fm.clone(), intersections[h as usize].clone());
            let mut rhs_gens = Vec::new();
            for p in powers[(n - h) as usize].gens() {
                for g in lh.gens() {
                    let v = fm.reduce_vect_mod_ring(&gb::vect_scale_poly(ar, g, p));
                    if !v.is_zero() {
                        rhs_gens.push(v);
                    }
                }
            }
            let rhs_gb = span_gb(&fm, &rhs_gens);
            let ln_gb = span_gb(&fm, &intersections[n as usize]);
            let forward = intersections[n as usize]
                .iter()
                .all(|v| in_span_gb(&fm, &rhs_gb, v));
            let backward = rhs_gens.iter().all(|v| in_span_gb(&fm, &ln_gb, v));
            if !(forward && backward) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut h_strong = None;
    for h in 0..=n_max {
        if strong_holds(h)? {
            h_strong = Some(h);
            break;
        }
    }
    debug_assert!(match (h_weak, h_strong) {
        (Some(w), Some(s)) => s >= w,
        _ => true,
    });

    let mut witnesses = Vec::new();
    for n in 1..=n_max {
        let mut minimality_witness = None;
        if let Some(h) = h_weak {
            if h >= 1 && n >= h - 1 {
                // a generator violating the containment at h-1
                let k = (n - (h - 1)) as usize;
                if let Some(v) = intersections[n as usize]
                    .iter()
                    .find(|v| !in_span_gb(&fm, &ika_gb[k], v))
                {
                    minimality_witness = Some(format!(
                        "{} ∈ I^{}·B ∩ A but not in I^{}·A",
                        fm.fmt_vect(v),
                        n,
                        k
                    ));
                }
            }
        }
        witnesses.push(ArWitness {
            n,
            intersection_gens: intersections[n as usize].len(),
            minimality_witness,
        });
    }

    Ok(ArResult {
        pair: pair_label.to_string(),
        n_max,
        h_weak,
        h_strong,
        witnesses,
    })
}

/// Weak AR numbers of im ∂_(i+1) ⊆ F_i along a precomputed resolution.
pub fn syzygetic_ar_with_resolution<F: Field>(
    res: &Resolution<F>,
    ideal: &Ideal<F>,
    i_from: usize,
    i_to: usize,
    n_max: u32,
) -> Result<Vec<(usize, ArResult)>> {
    let mut out = Vec::new();
    for i in i_from..=i_to {
        let result = match (res.complex().module(i), res.differential(i + 1)) {
            (Some(fm), Some(d)) => {
                let image = Subquotient::submodule(fm.clone(), d.cols().to_vec());
                let free = Subquotient::free(fm.clone());
                artin_rees_number(&image, &free, ideal, n_max, &format!("im ∂_{} ⊆ F_{}", i + 1, i))?
            }
            _ => ArResult {
                pair: format!("im ∂_{} ⊆ F_{} (zero image)", i + 1, i),
                n_max,
                h_weak: Some(0),
                h_strong: Some(0),
                witnesses: Vec::new(),
            },
        };
        out.push((i, result));
    }
    Ok(out)
}

/// Per-index syzygetic Artin-Rees numbers of M with respect to I: the AR
/// number of im ∂_(i+1) inside F_i for each i in the range.
pub fn syzygetic_ar<F: Field>(
    m: &Subquotient<F>,
    ideal: &Ideal<F>,
    i_from: usize,
    i_to: usize,
    n_max: u32,
) -> Result<Vec<(usize, ArResult)>> {
    let res = free_resolution(m, i_to + 1)?;
    syzygetic_ar_with_resolution(&res, ideal, i_from, i_to, n_max)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionNumber {
    Number(u32),
    ExceedsWindow,
}

#[derive(Clone, Debug)]
pub struct ReductionOutcome {
    pub result: ReductionNumber,
    /// I^n ⊆ J^(n-k) verified for k ≤ n ≤ k_max+1 (vacuous when no k found)
    pub consequence_verified: bool,
}

/// Smallest k ≤ k_max with I^(k+1) = J·I^k (canonical-basis equality), plus
/// a check of the consequence I^n ⊆ J^(n-k) over the window.
pub fn reduction_number<F: Field>(
    j: &Ideal<F>,
    i: &Ideal<F>,
    k_max: u32,
) -> Result<ReductionOutcome> {
    if !j.ring().same(i.ring()) {
        return Err(Error::ring_mismatch("reduction across different rings"));
    }
    if !j.is_subset_of(i) {
        return Err(Error::precondition("J is not contained in I"));
    }
    let mut found = None;
    for k in 0..=k_max {
        let lhs = i.power(k + 1);
        let rhs = j.product(&i.power(k));
        if lhs.equals(&rhs) {
            found = Some(k);
            break;
        }
    }
    match found {
        None => Ok(ReductionOutcome {
            result: ReductionNumber::ExceedsWindow,
            consequence_verified: true,
        }),
        Some(k) => {
            let mut consequence = true;
            for n in k..=(k_max + 1) {
                let lhs = i.power(n);
                let rhs = j.power(n - k);
                if !lhs.is_subset_of(&rhs) {
                    consequence = false;
                    break;
                }
            }
            Ok(ReductionOutcome {
                result: ReductionNumber::Number(k),
                consequence_verified: consequence,
            })
        }
    }
}

/// The main-reduction containment
/// I_(d-i)^n·G ∩ N ⊆ I_(d-i)^(n-h)·N + (I_(d-i-1)^(n-h)·G ∩ N),
/// evaluated generator by generator. `x_seq` defines the chain
/// I_k = (x_1..x_k) with I_0 = 0.
pub fn main_reduction_check<F: Field>(
    n_mod: &Subquotient<F>,
    g: &FreeModule<F>,
    x_seq: &[Poly<F>],
    i: usize,
    n: u32,
    h: u32,
) -> Result<bool> {
    let ring = g.ring().clone();
    let ar = ring.ambient();
    let d = ring.dimension();
    if x_seq.len() != d {
        return Err(Error::precondition(format!(
            "chain needs {d} elements, got {}",
            x_seq.len()
        )));
    }
    if i >= d {
        return Err(Error::precondition(format!("index i = {i} out of 0..{d}")));
    }
    if n < h {
        return Err(Error::precondition("n must be at least h"));
    }
    if !n_mod.is_submodule() || !n_mod.ambient().same(g) {
        return Err(Error::precondition("N must be a submodule of G"));
    }
    let chain = |k: usize| Ideal::new(ring.clone(), x_seq[..k].to_vec());
    let i_top = chain(d - i);
    let i_low = chain(d - i - 1);

    let scale = |target: &Subquotient<F>, id: &Ideal<F>, power: u32| -> Vec<Vect<F>> {
        let pw = id.power(power);
        let mut out = Vec::new();
        for p in pw.gens() {
            for v in target.gens() {
                let w = g.reduce_vect_mod_ring(&gb::vect_scale_poly(ar, v, p));
                if !w.is_zero() {
                    out.push(w);
                }
            }
        }
        out
    };
    let free_g = Subquotient::free(g.clone());

    // LHS = I_(d-i)^n G ∩ N
    let lhs_pow = Subquotient::submodule(g.clone(), scale(&free_g, &i_top, n));
    let lhs = module_intersection(&lhs_pow, n_mod)?;

    // RHS = I_(d-i)^(n-h) N + (I_(d-i-1)^(n-h) G ∩ N)
    let mut rhs_gens = scale(n_mod, &i_top, n - h);
    let low_pow = Subquotient::submodule(g.clone(), scale(&free_g, &i_low, n - h));
    let second = module_intersection(&low_pow, n_mod)?;
    rhs_gens.extend(second.gens().iter().cloned());
    let rhs_gb = span_gb(g, &rhs_gens);

    Ok(lhs.gens().iter().all(|v| in_span_gb(g, &rhs_gb, v)))
}

/// One (module, ideal) case of a sweep.
#[derive(Clone, Debug)]
pub struct SweepCase {
    pub case_id: String,
    pub module_desc: String,
    pub ideal_desc: String,
    pub per_index: Vec<(usize, ArResult)>,
    /// max over the index range; None if any window was unbounded
    pub max_h: Option<u32>,
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub cases: Vec<SweepCase>,
    pub max_h: Option<u32>,
}

/// Runs syzygetic AR for every (module, ideal) pair over the index range;
/// each module is resolved once. Deterministic in the input order.
pub fn uniform_sweep<F: Field>(
    modules: &[(String, Subquotient<F>)],
    ideals: &[(String, Ideal<F>)],
    i_from: usize,
    i_to: usize,
    n_max: u32,
) -> Result<SweepOutcome> {
    if modules.is_empty() || ideals.is_empty() {
        return Err(Error::precondition("empty sweep family"));
    }
    let mut cases = Vec::new();
    let mut overall: Option<u32> = Some(0);
    for (mdesc, m) in modules {
        let res = free_resolution(m, i_to + 1)?;
        for (idesc, ideal) in ideals {
            let per_index = syzygetic_ar_with_resolution(&res, ideal, i_from, i_to, n_max)?;
            let mut case_max: Option<u32> = Some(0);
            for (_, r) in &per_index {
                case_max = match (case_max, r.h_weak) {
                    (Some(a), Some(b)) => Some(a.max(b)),
                    _ => None,
                };
            }
            overall = match (overall, case_max) {
                (Some(a), Some(b)) => Some(a.max(b)),
                _ => None,
            };
            cases.push(SweepCase {
                case_id: format!("{mdesc}|{idesc}"),
                module_desc: mdesc.clone(),
                ideal_desc: idesc.clone(),
                per_index,
                max_h: case_max,
            });
        }
    }
    Ok(SweepOutcome {
        cases,
        max_h: overall,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_poly;
    use crate::ring::{PolyRing, QuotientRing, RingRef};

    fn k_xy() -> RingRef<Rationals> {
        QuotientRing::polynomial_ring(
            PolyRing::new(Rationals, &["x", "y"], MonomialOrder::GrevLex, None).unwrap(),
        )
    }

    #[test]
    fn principal_inside_free() {
        // A = (x)R ⊆ B = R, I = (x,y): h_weak = h_strong = 1
        let r = k_xy();
        let fm = FreeModule::standard(r.clone(), 1);
        let a = Subquotient::submodule(
            fm.clone(),
            vec![Vect::from_poly(parse_poly(r.ambient(), "x").unwrap())],
        );
        let b = Subquotient::free(fm);
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        let res = artin_rees_number(&a, &b, &m, 6, "xR in R").unwrap();
        assert_eq!(res.h_weak, Some(1));
        assert_eq!(res.h_strong, Some(1));
        // some witness shows h = 0 fails
        assert!(res.witnesses.iter().any(|w| w.minimality_witness.is_some()));
    }

    #[test]
    fn trivial_cases() {
        let r = k_xy();
        let fm = FreeModule::standard(r.clone(), 1);
        let b = Subquotient::free(fm.clone());
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        // A = B
        let res = artin_rees_number(&b, &b, &m, 4, "B in B").unwrap();
        assert_eq!(res.h_weak, Some(0));
        // A = 0
        let zero = Subquotient::submodule(fm, vec![]);
        let res = artin_rees_number(&zero, &b, &m, 4, "0 in B").unwrap();
        assert_eq!(res.h_weak, Some(0));
        assert_eq!(res.h_strong, Some(0));
    }

    #[test]
    fn containment_precondition() {
        let r = k_xy();
        let fm = FreeModule::standard(r.clone(), 1);
        let a = Subquotient::free(fm.clone());
        let b = Subquotient::submodule(
            fm,
            vec![Vect::from_poly(parse_poly(r.ambient(), "x").unwrap())],
        );
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert!(artin_rees_number(&a, &b, &m, 3, "bad").is_err());
    }

    #[test]
    fn koszul_growth_in_t() {
        // M = R/(x^t, y^t), I = (x,y): syzygetic AR number at i = 0 is
        // exactly t; at i = 2 the image is zero so h = 0
        let r = k_xy();
        let m_ideal = Ideal::parse(&r, &["x", "y"]).unwrap();
        for t in [2u32, 3] {
            let gens = [format!("x^{t}"), format!("y^{t}")];
            let i = Ideal::parse(&r, &[&gens[0], &gens[1]]).unwrap();
            let m = Subquotient::cyclic(&i);
            let per = syzygetic_ar(&m, &m_ideal, 0, 2, (2 * t + 2).min(8)).unwrap();
            assert_eq!(per[0].1.h_weak, Some(t), "i = 0, t = {t}");
            assert_eq!(per[2].1.h_weak, Some(0), "i = 2, t = {t}");
        }
    }

    #[test]
    fn reduction_number_examples() {
        let r = k_xy();
        let i = Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        let j = Ideal::parse(&r, &["x^2", "y^2"]).unwrap();
        let out = reduction_number(&j, &i, 5).unwrap();
        assert_eq!(out.result, ReductionNumber::Number(1));
        assert!(out.consequence_verified);

        // J = I: k = 0
        let out = reduction_number(&i, &i, 5).unwrap();
        assert_eq!(out.result, ReductionNumber::Number(0));

        // J not inside I
        let j2 = Ideal::parse(&r, &["x"]).unwrap();
        assert!(reduction_number(&j2, &i, 5).is_err());
    }

    #[test]
    fn reduction_number_m_cubed() {
        // J = (x^3, y^3) ⊆ I = (x,y)^3 has reduction number 1: I^2 = J·I
        // (fixed by the monomial oracle in the integration tests)
        let r = k_xy();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap().power(3);
        let j = Ideal::parse(&r, &["x^3", "y^3"]).unwrap();
        let out = reduction_number(&j, &i, 4).unwrap();
        assert_eq!(out.result, ReductionNumber::Number(1));
    }

    #[test]
    fn reduction_zero_iff_equal() {
        let r = k_xy();
        let i = Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        let j = Ideal::parse(&r, &["x^2", "y^2", "x*y + x^2"]).unwrap();
        // same ideal, different generators
        let out = reduction_number(&j, &i, 3).unwrap();
        assert_eq!(out.result, ReductionNumber::Number(0));
        assert!(j.equals(&i));
    }

    #[test]
    fn main_reduction_degenerate_cases() {
        let r = k_xy();
        let fm = FreeModule::standard(r.clone(), 2);
        // N = ker(R^2 -> R/(x,y)) setup: use the first syzygy of (x, y),
        // i.e. N = im ∂_2 of Koszul = span{(-y, x)}
        let n = Subquotient::submodule(
            fm.clone(),
            vec![Vect {
                comps: vec![
                    parse_poly(r.ambient(), "-y").unwrap(),
                    parse_poly(r.ambient(), "x").unwrap(),
                ],
            }],
        );
        let x_seq = vec![
            parse_poly(r.ambient(), "x").unwrap(),
            parse_poly(r.ambient(), "y").unwrap(),
        ];
        // h = n: right side has power 0: always true
        assert!(main_reduction_check(&n, &fm, &x_seq, 0, 3, 3).unwrap());
        assert!(main_reduction_check(&n, &fm, &x_seq, 1, 3, 3).unwrap());
        // record the oracle outcome for n = 4, h = 2 at i = 0
        let got = main_reduction_check(&n, &fm, &x_seq, 0, 4, 2).unwrap();
        assert!(got, "Koszul syzygy module is 2-AR for the full chain");
    }

    #[test]
    fn sweep_of_size_one() {
        let r = k_xy();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        let m = Subquotient::cyclic(&Ideal::parse(&r, &["x^2", "y^2"]).unwrap());
        let out = uniform_sweep(
            &[("R/(x^2,y^2)".into(), m)],
            &[("m".into(), i)],
            2,
            2,
            4,
        )
        .unwrap();
        assert_eq!(out.cases.len(), 1);
        assert_eq!(out.max_h, out.cases[0].max_h);
        // complete intersection: third differential is zero, so h = 0
        assert_eq!(out.max_h, Some(0));
    }

    #[test]
    fn empty_family_rejected() {
        let r = k_xy();
        let i = Ideal::parse(&r, &["x"]).unwrap();
        assert!(uniform_sweep::<Rationals>(&[], &[("i".into(), i)], 0, 1, 2).is_err());
    }
}
