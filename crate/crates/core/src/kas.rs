//! Koszul annihilating sequences: the bound functions E and E₁, cohomology
//! annihilator ideals via graded duality, candidate search with
//! certificates, verification grids, well-suitedness, special reductions,
//! and the derived annihilation checks.

use crate::artin_rees::{reduction_number, ReductionNumber, ReductionOutcome};
use crate::complex::{
    annihilates, grade, koszul_complex, power_complex, rank_profile, tensor_complexes,
    tensor_homology, ChainComplex,
};
use crate::field::Field;
use crate::gb::Vect;
use crate::ideal::Ideal;
use crate::module::Subquotient;
use crate::poly::Poly;
use crate::resolution::{ext_module, free_resolution, tor};
use crate::ring::{QuotientRing, RingRef};
use crate::rng::labeled_rng;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// E(δ, ν, 0) = δ − ν + 1, E(δ, ν, τ) = δ + (δ+2)·E(δ, ν−1, τ−1).
pub fn e_bound(delta: u64, nu: u64, tau: u64) -> Result<u64> {
    check_bound_args(delta, nu, tau)?;
    Ok(if tau == 0 {
        delta - nu + 1
    } else {
        delta + (delta + 2) * e_bound(delta, nu - 1, tau - 1)?
    })
}

/// E₁(δ, ν, 0) = δ − ν + 1, E₁(δ, ν, τ) = δ + (δ+2)·E₁(δ−1, ν−1, τ−1).
pub fn e1_bound(delta: u64, nu: u64, tau: u64) -> Result<u64> {
    check_bound_args(delta, nu, tau)?;
    Ok(if tau == 0 {
        delta - nu + 1
    } else {
        delta + (delta + 2) * e1_bound(delta - 1, nu - 1, tau - 1)?
    })
}

fn check_bound_args(delta: u64, nu: u64, tau: u64) -> Result<()> {
    if delta >= nu && nu > tau {
        Ok(())
    } else {
        Err(Error::precondition(format!(
            "bound functions need δ ≥ ν > τ ≥ 0, got ({delta}, {nu}, {tau})"
        )))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub delta: u64,
    pub nu: u64,
    pub tau: u64,
    pub e: u64,
    pub e1: u64,
}

/// Memoized table of both bound functions over δ ≤ delta_max.
pub fn bounds_table(delta_max: u64) -> Vec<BoundRow> {
    let mut rows = Vec::new();
    let mut e_memo: BTreeMap<(u64, u64, u64), u64> = BTreeMap::new();
    let mut e1_memo: BTreeMap<(u64, u64, u64), u64> = BTreeMap::new();
    for delta in 1..=delta_max {
        for nu in 1..=delta {
            for tau in 0..nu {
                let e = *e_memo
                    .entry((delta, nu, tau))
                    .or_insert_with(|| e_bound(delta, nu, tau).unwrap());
                let e1 = *e1_memo
                    .entry((delta, nu, tau))
                    .or_insert_with(|| e1_bound(delta, nu, tau).unwrap());
                rows.push(BoundRow {
                    delta,
                    nu,
                    tau,
                    e,
                    e1,
                });
            }
        }
    }
    rows
}

/// The annihilator ideals a_i = Ann H^i_m(R) (through graded duality as
/// annihilators of Ext against the ambient polynomial ring) and their
/// partial products b_i = a_0⋯a_i, for 0 ≤ i ≤ d−1.
#[derive(Clone, Debug)]
pub struct CohomologyAnnihilators<F: Field> {
    pub a_ideals: Vec<Ideal<F>>,
    pub b_ideals: Vec<Ideal<F>>,
    /// (i, dim R/b_i) with the required bound dim R/b_i ≤ i
    pub dim_checks: Vec<(usize, i64)>,
}

pub fn cohomology_annihilators<F: Field>(ring: &RingRef<F>) -> Result<CohomologyAnnihilators<F>> {
    let d = ring.dimension();
    let big_d = ring.nvars();
    if d == 0 {
        return Err(Error::precondition(
            "cohomology annihilators need a positive-dimensional ring",
        ));
    }
    // R as a module over the ambient polynomial ring S
    let s_ring = QuotientRing::polynomial_ring_arc(ring.ambient().clone());
    let r_over_s = Subquotient::cyclic(&Ideal::new(s_ring.clone(), ring.defining().to_vec()));
    let res = free_resolution(&r_over_s, big_d + 1)?;

    let mut a_ideals = Vec::new();
    for i in 0..d {
        let ext = ext_module(&res, big_d - i)?;
        let ann_s = ext.annihilator()?;
        a_ideals.push(Ideal::new(ring.clone(), ann_s.gens().to_vec()));
    }
    let mut b_ideals: Vec<Ideal<F>> = Vec::new();
    for i in 0..d {
        let b = if i == 0 {
            a_ideals[0].clone()
        } else {
            b_ideals[i - 1].product(&a_ideals[i])
        };
        b_ideals.push(b);
    }
    let mut dim_checks = Vec::new();
    for (i, b) in b_ideals.iter().enumerate() {
        let dim = if b.is_unit_ideal() {
            -1
        } else {
            b.krull_dimension()?
        };
        dim_checks.push((i, dim));
    }
    Ok(CohomologyAnnihilators {
        a_ideals,
        b_ideals,
        dim_checks,
    })
}

/// How the elements of a candidate are powered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExponentPolicy {
    /// the prescribed exponent E₁(d, d, d−1)
    Prescribed,
    /// a fixed (usually empirically sufficient) exponent
    Fixed(u64),
}

/// A Koszul-annihilating-sequence candidate: base elements c'_1..c'_d with
/// membership and dimension certificates, and the exponent in use.
#[derive(Clone, Debug)]
pub struct KasCandidate<F: Field> {
    ring: RingRef<F>,
    /// c'_1..c'_d (index 0 holds c'_1)
    pub base_elements: Vec<Poly<F>>,
    pub exponent_prescribed: u64,
    pub exponent_used: u64,
    pub certificates: Vec<String>,
}

impl<F: Field> KasCandidate<F> {
    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.base_elements.len()
    }

    /// c_i = (c'_i)^exponent, 1-based.
    pub fn element(&self, i: usize) -> Poly<F> {
        let ar = self.ring.ambient();
        self.ring
            .reduce(&ar.pow(&self.base_elements[i - 1], self.exponent_used as u32))
    }

    pub fn elements(&self) -> Vec<Poly<F>> {
        (1..=self.dim()).map(|i| self.element(i)).collect()
    }

    /// c_i..c_d as polynomials (1-based, inclusive); empty when i > d.
    pub fn tail(&self, i: usize) -> Vec<Poly<F>> {
        (i..=self.dim()).map(|k| self.element(k)).collect()
    }

    /// Re-derive every certificate from scratch: memberships in the b-chain
    /// and the dimension conditions.
    pub fn reverify(&self, ann: &CohomologyAnnihilators<F>) -> Result<Vec<String>> {
        let d = self.dim();
        let mut notes = Vec::new();
        for i in 1..=d {
            let member = ann.b_ideals[i - 1].contains(&self.base_elements[i - 1]);
            notes.push(format!("c'_{i} ∈ b_{}: {member}", i - 1));
            if !member {
                return Err(Error::precondition(format!(
                    "certificate failure: c'_{i} not in b_{}",
                    i - 1
                )));
            }
            let tail: Vec<Poly<F>> = self.base_elements[i - 1..].to_vec();
            let dim = Ideal::new(self.ring.clone(), tail).krull_dimension()?;
            notes.push(format!("dim R/(c'_{i}..c'_{d}) = {dim} (expect {})", i - 1));
            if dim != (i as i64) - 1 {
                return Err(Error::precondition(format!(
                    "certificate failure: dim R/(c'_{i}..c'_{d}) = {dim} != {}",
                    i - 1
                )));
            }
        }
        for i in 1..d {
            let dd = double_annihilator_dimension(&self.ring, &self.base_elements[i - 1])?;
            notes.push(format!("dim R/(0:(0:c'_{i})) = {dd} (≤ {})", i as i64 - 1));
            if dd > i as i64 - 1 {
                return Err(Error::precondition(format!(
                    "certificate failure: dim R/(0:(0:c'_{i})) = {dd} > {}",
                    i as i64 - 1
                )));
            }
        }
        Ok(notes)
    }
}

/// dim R/(0 : (0 : c)).
pub fn double_annihilator_dimension<F: Field>(ring: &RingRef<F>, c: &Poly<F>) -> Result<i64> {
    let zero = Ideal::zero(ring.clone());
    let ann_c = zero.quotient(c)?;
    let double = ann_c.annihilator_of()?;
    if double.is_unit_ideal() {
        Ok(-1)
    } else {
        double.krull_dimension()
    }
}

/// Randomized candidate search: draws homogeneous elements of the b-chain
/// within the degree bound, accepting on the dimension-drop, sop, and
/// double-annihilator certificates; the prime avoidance of the existence
/// proof is replaced by these a-posteriori checks.
pub fn kas_candidate<F: Field>(
    ring: &RingRef<F>,
    ann: &CohomologyAnnihilators<F>,
    seed: u64,
    degree_bound: i64,
    retries: u32,
    policy: ExponentPolicy,
) -> Result<KasCandidate<F>> {
    let d = ring.dimension();
    if d == 0 {
        return Err(Error::precondition("zero-dimensional ring has an empty KAS"));
    }
    let exponent_prescribed = if d >= 1 {
        e1_bound(d as u64, d as u64, d as u64 - 1)?
    } else {
        1
    };
    let exponent_used = match policy {
        ExponentPolicy::Prescribed => exponent_prescribed,
        ExponentPolicy::Fixed(t) => t.max(1),
    };
    let mut rng = labeled_rng(seed, "kas-candidate");
    let mut chosen: Vec<Poly<F>> = Vec::new(); // c'_d, c'_{d-1}, ...
    let mut certificates = Vec::new();
    let mut last_failure = String::new();

    for i in (1..=d).rev() {
        let b = &ann.b_ideals[i - 1];
        if b.gens().is_empty() {
            return Err(Error::SearchFailed(format!(
                "b_{} is the zero ideal; no candidate exists",
                i - 1
            )));
        }
        let mut accepted = false;
        'attempts: for attempt in 0..retries {
            for deg in 1..=degree_bound {
                let c = b.random_element_of_degree(deg, &mut rng);
                if c.is_zero() {
                    last_failure = format!(
                        "degree bound {degree_bound} gives no elements of b_{}",
                        i - 1
                    );
                    continue;
                }
                // dimension drop: dim R/(c'_i, ..., c'_d) = i - 1
                let mut tail = vec![c.clone()];
                tail.extend(chosen.iter().cloned());
                let dim = Ideal::new(ring.clone(), tail).krull_dimension()?;
                if dim != (i as i64) - 1 {
                    last_failure = format!(
                        "dim R/(c'_{i}..c'_{d}) = {dim}, expected {} (attempt {attempt})",
                        i - 1
                    );
                    continue;
                }
                // double-annihilator bound, skipped for i = d
                if i < d {
                    let dd = double_annihilator_dimension(ring, &c)?;
                    if dd > i as i64 - 1 {
                        last_failure = format!(
                            "dim R/(0:(0:c'_{i})) = {dd} > {} (attempt {attempt})",
                            i as i64 - 1
                        );
                        continue;
                    }
                    certificates.push(format!(
                        "dim R/(0:(0:c'_{i})) = {dd} ≤ {}",
                        i as i64 - 1
                    ));
                }
                certificates.push(format!(
                    "c'_{i} = {} ∈ b_{}, dim R/(c'_{i}..c'_{d}) = {}",
                    ring.fmt_poly(&c),
                    i - 1,
                    i - 1
                ));
                chosen.insert(0, c);
                accepted = true;
                break 'attempts;
            }
        }
        if !accepted {
            return Err(Error::SearchFailed(format!(
                "no candidate for c'_{i} within {retries} retries: {last_failure}"
            )));
        }
    }
    certificates.push(format!(
        "(c'_1..c'_{d}) is a system of parameters; prescribed exponent E₁({d},{d},{}) = {exponent_prescribed}",
        d - 1
    ));
    Ok(KasCandidate {
        ring: ring.clone(),
        base_elements: chosen,
        exponent_prescribed,
        exponent_used,
        certificates,
    })
}

/// sop ⟺ the sequence has length d and cuts the ring down to dimension 0.
pub fn is_system_of_parameters<F: Field>(seq: &[Poly<F>], ring: &RingRef<F>) -> Result<bool> {
    if seq.len() != ring.dimension() {
        return Ok(false);
    }
    let ideal = Ideal::new(ring.clone(), seq.to_vec());
    if ideal.is_unit_ideal() {
        return Ok(false);
    }
    Ok(ideal.krull_dimension()? == 0)
}

/// Every subset of x of cardinality d−(j−i+1) together with c_i..c_j must
/// be a system of parameters, for all 1 ≤ i ≤ j ≤ d.
pub fn well_suited_check<F: Field>(
    x_seq: &[Poly<F>],
    c_seq: &[Poly<F>],
    ring: &RingRef<F>,
) -> Result<bool> {
    let d = ring.dimension();
    if x_seq.len() != d || c_seq.len() != d {
        return Ok(false);
    }
    if !is_system_of_parameters(x_seq, ring)? {
        return Ok(false);
    }
    for i in 1..=d {
        for j in i..=d {
            let take = d - (j - i + 1);
            for subset in subsets_of(x_seq.len(), take) {
                let mut seq: Vec<Poly<F>> = subset.iter().map(|&k| x_seq[k].clone()).collect();
                seq.extend(c_seq[i - 1..j].iter().cloned());
                if !is_system_of_parameters(&seq, ring)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn subsets_of(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// One tested configuration of the KAS verification grid.
#[derive(Clone, Debug)]
pub struct KasCheck {
    pub module: String,
    pub sop_index: usize,
    pub k: usize,
    pub j: usize,
    pub v: usize,
    pub n: usize,
    pub t: u32,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct KasVerifyReport {
    pub checks: Vec<KasCheck>,
    pub failures: usize,
    /// configurations skipped because the sop precondition failed
    pub skipped: Vec<String>,
}

/// Tests the annihilation clause of the KAS definition on a sampled grid:
/// for sops (x_1..x_k, c_(k+1)..c_d), the element c_v must kill
/// H_n(x_1..x_k, c_(k+1)^t..c_j^t; M) for all v ≥ j ≥ k ≥ 1, n ≥ 1, t in
/// the list.
pub fn kas_verify<F: Field>(
    cand: &KasCandidate<F>,
    modules: &[(String, Subquotient<F>)],
    sop_family: &[Vec<Poly<F>>],
    t_list: &[u32],
    n_cap: usize,
) -> Result<KasVerifyReport> {
    let ring = cand.ring().clone();
    let ar = ring.ambient();
    let d = cand.dim();
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    let mut failures = 0;

    for (sidx, x) in sop_family.iter().enumerate() {
        if x.len() != d {
            skipped.push(format!("sop {sidx}: length {} != d = {d}", x.len()));
            continue;
        }
        for k in 1..=d {
            // precondition: x_1..x_k, c_(k+1)..c_d is a sop
            let mut mixed: Vec<Poly<F>> = x[..k].to_vec();
            mixed.extend(cand.tail(k + 1));
            if !is_system_of_parameters(&mixed, &ring)? {
                skipped.push(format!("sop {sidx}, k = {k}: mixed sequence is not a sop"));
                continue;
            }
            for j in k..=d {
                for t in t_list {
                    // sequence x_1..x_k, c_(k+1)^t..c_j^t (no c-part for j = k)
                    if j == k && *t != t_list[0] {
                        continue;
                    }
                    let mut seq: Vec<Poly<F>> = x[..k].to_vec();
                    for c_idx in k + 1..=j {
                        seq.push(ar.pow(&cand.element(c_idx), *t));
                    }
                    let complex = koszul_complex(&seq, &ring)?;
                    for (mname, m) in modules {
                        let homs: Vec<Subquotient<F>> = (1..=n_cap.min(seq.len()))
                            .map(|n| tensor_homology(&complex, m, n))
                            .collect::<Result<_>>()?;
                        for v in j..=d {
                            let cv = cand.element(v);
                            for (n_idx, h) in homs.iter().enumerate() {
                                let passed = annihilates(&cv, h)?;
                                if !passed {
                                    failures += 1;
                                }
                                checks.push(KasCheck {
                                    module: mname.clone(),
                                    sop_index: sidx,
                                    k,
                                    j,
                                    v,
                                    n: n_idx + 1,
                                    t: *t,
                                    passed,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(KasVerifyReport {
        checks,
        failures,
        skipped,
    })
}

#[derive(Clone, Debug)]
pub struct SpecialReduction<F: Field> {
    pub x_seq: Vec<Poly<F>>,
    pub certificates: Vec<String>,
    /// reduction number of (x_1..x_d) inside I
    pub reduction_of_ideal: ReductionOutcome,
}

/// Searches for a special reduction of an m-primary ideal I with respect to
/// the candidate: d random homogeneous combinations of the generators that
/// are well-suited to c and satisfy both reduction conditions (modulo the
/// c-tails and modulo the double annihilators) within the k_max window.
pub fn special_reduction<F: Field>(
    ideal: &Ideal<F>,
    cand: &KasCandidate<F>,
    seed: u64,
    k_max: u32,
    retries: u32,
) -> Result<SpecialReduction<F>> {
    let ring = cand.ring().clone();
    let ar = ring.ambient();
    let d = ring.dimension();
    if ideal.krull_dimension()? != 0 {
        return Err(Error::precondition(
            "special reductions are defined for m-primary ideals",
        ));
    }
    let degree = ideal
        .gens()
        .iter()
        .filter_map(|g| ar.degree(g))
        .max()
        .ok_or_else(|| Error::precondition("ideal has no generators"))?;
    let mut rng = labeled_rng(seed, "special-reduction");
    let mut last_failure = String::new();

    'trials: for trial in 0..retries {
        let x: Vec<Poly<F>> = (0..d)
            .map(|_| ideal.random_element_of_degree(degree, &mut rng))
            .collect();
        if x.iter().any(|p| p.is_zero()) {
            last_failure = format!("trial {trial}: zero combination drawn");
            continue;
        }
        if !well_suited_check(&x, &cand.elements(), &ring)? {
            last_failure = format!("trial {trial}: sequence not well-suited");
            continue;
        }
        let mut certificates =
            vec![format!("well-suited to the candidate: verified (trial {trial})")];

        for i in 0..d {
            // condition (1): I_(d-i-1) reduces I_(d-i) modulo (c_(d-i)..c_d)
            let tail = cand.tail(d - i);
            let q1 = quotient_by_extra(&ring, &tail)?;
            // condition (2): same modulo (0 : (0 : c_(d-i)))
            let dbl = {
                let zero = Ideal::zero(ring.clone());
                let ann_c = zero.quotient(&cand.element(d - i))?;
                ann_c.annihilator_of()?
            };
            if dbl.is_unit_ideal() {
                // modulo the unit ideal everything reduces trivially
                certificates.push(format!(
                    "(0:(0:c_{})) = R: condition (2) is vacuous at i = {i}",
                    d - i
                ));
            }
            let q2 = if dbl.is_unit_ideal() {
                None
            } else {
                Some(quotient_by_extra(&ring, dbl.gens())?)
            };
            let mut conds = vec![("mod (c-tail)", &q1)];
            if let Some(q2) = q2.as_ref() {
                conds.push(("mod (0:(0:c))", q2));
            }
            for (cond, q) in conds {
                let j_img = Ideal::new(q.clone(), x[..d - i - 1].to_vec());
                let i_img = Ideal::new(q.clone(), x[..d - i].to_vec());
                match reduction_number(&j_img, &i_img, k_max) {
                    Ok(out) => match out.result {
                        ReductionNumber::Number(k) => certificates.push(format!(
                            "I_{} reduces I_{} {cond}: reduction number {k}",
                            d - i - 1,
                            d - i
                        )),
                        ReductionNumber::ExceedsWindow => {
                            last_failure = format!(
                                "trial {trial}: reduction number {cond} at i = {i} exceeds {k_max}"
                            );
                            continue 'trials;
                        }
                    },
                    Err(e) => {
                        last_failure = format!("trial {trial}: {e}");
                        continue 'trials;
                    }
                }
            }
        }
        // record how the sequence reduces I itself
        let xi = Ideal::new(ring.clone(), x.clone());
        let red = reduction_number(&xi, ideal, k_max)?;
        match red.result {
            ReductionNumber::Number(k) => {
                certificates.push(format!("(x_1..x_{d}) reduces I with reduction number {k}"))
            }
            ReductionNumber::ExceedsWindow => {
                last_failure = format!("trial {trial}: (x) does not reduce I within {k_max}");
                continue 'trials;
            }
        }
        return Ok(SpecialReduction {
            x_seq: x,
            certificates,
            reduction_of_ideal: red,
        });
    }
    Err(Error::SearchFailed(format!(
        "no special reduction within {retries} trials: {last_failure}"
    )))
}

/// R/(defining + extra) as a fresh quotient ring.
fn quotient_by_extra<F: Field>(ring: &RingRef<F>, extra: &[Poly<F>]) -> Result<RingRef<F>> {
    let mut gens = ring.defining().to_vec();
    gens.extend(extra.iter().cloned());
    QuotientRing::make(ring.ambient().clone(), &gens)
}

#[derive(Clone, Debug)]
pub struct FromAgtItem {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct FromAgtReport {
    pub items: Vec<FromAgtItem>,
    pub all_passed: bool,
}

/// Parameters of one fromAGT instance: 1 ≤ j ≤ i ≤ d, exponents
/// t_(j+1)..t_i on the c-tail, the tested index k in i..d, the power n of
/// I_j, and the annihilation exponent t.
#[derive(Clone, Debug)]
pub struct FromAgtParams {
    pub j: usize,
    pub i: usize,
    pub n: u32,
    pub t_exps: Vec<u32>,
    pub k: usize,
    pub t_annihilate: u32,
}

/// The derived annihilation and containment checks: (1) the tensored power
/// complex satisfies the rank and primariness hypotheses, (2) c_k^t kills
/// Tor_1 against the twisted quotient, (3) c_k^t collapses the intersection
/// into the expected submodule, (4) the colon capture stays inside.
pub fn fromagt_checks<F: Field>(
    cand: &KasCandidate<F>,
    x_seq: &[Poly<F>],
    m: &Subquotient<F>,
    params: &FromAgtParams,
) -> Result<FromAgtReport> {
    let ring = cand.ring().clone();
    let ar = ring.ambient();
    let d = cand.dim();
    let FromAgtParams {
        j,
        i,
        n,
        ref t_exps,
        k,
        t_annihilate,
    } = *params;
    if !(1 <= j && j <= i && i <= d) {
        return Err(Error::precondition("need 1 ≤ j ≤ i ≤ d"));
    }
    if !(i <= k && k <= d) {
        return Err(Error::precondition("need i ≤ k ≤ d"));
    }
    if t_exps.len() != i - j {
        return Err(Error::precondition(format!(
            "expected {} tail exponents, got {}",
            i - j,
            t_exps.len()
        )));
    }
    if !well_suited_check(x_seq, &cand.elements(), &ring)? {
        return Err(Error::precondition("x_seq is not well-suited to the candidate"));
    }

    let mut items = Vec::new();
    let ck_t = ar.pow(&cand.element(k), t_annihilate);

    // the c-tail c_(j+1)^(t_(j+1)) .. c_i^(t_i)
    let tail: Vec<Poly<F>> = (j + 1..=i)
        .zip(t_exps.iter())
        .map(|(idx, t)| ring.reduce(&ar.pow(&cand.element(idx), *t)))
        .collect();
    let ij = Ideal::new(ring.clone(), x_seq[..j].to_vec());
    let a_full = ij.power(n).sum(&Ideal::new(ring.clone(), tail.clone()));

    // (1) B^(I_j, n) ⊗ K(c-tail) satisfies the rank conditions and the
    // primariness of I(∂_i) + (c_(i+1)..c_d)
    let item1 = match power_complex(&x_seq[..j], n, &ring) {
        Err(e) => FromAgtItem {
            label: "(1) hypotheses of the complex".into(),
            passed: false,
            detail: format!("power complex unavailable: {e}"),
        },
        Ok(bc) => {
            let complex = if tail.is_empty() {
                bc
            } else {
                tensor_complexes(&bc, &koszul_complex(&tail, &ring)?)?
            };
            let prof = rank_profile(&complex)?;
            let mut detail = String::new();
            let mut passed = prof.standard_conditions;
            if !passed {
                detail = format!("rank conditions fail at {:?}", prof.rank_failures);
            } else {
                for e in &prof.entries {
                    let with_tail = e.minor_ideal.sum(&Ideal::new(
                        ring.clone(),
                        cand.tail(e.index + 1),
                    ));
                    let dim = if with_tail.is_unit_ideal() {
                        -1
                    } else {
                        with_tail.krull_dimension()?
                    };
                    if dim > 0 {
                        passed = false;
                        detail = format!(
                            "I(∂_{}) + (c_{}..c_{d}) has dimension {dim}",
                            e.index,
                            e.index + 1
                        );
                        break;
                    }
                }
            }
            if passed {
                detail = "standard rank conditions and m-primariness verified".into();
            }
            FromAgtItem {
                label: "(1) hypotheses of the complex".into(),
                passed,
                detail,
            }
        }
    };
    items.push(item1);

    // (2) c_k^t · Tor_1(R/(I_j^n + tail), M) = 0
    let tor1 = tor(1, &a_full, m)?;
    let passed2 = annihilates(&ck_t, &tor1)?;
    items.push(FromAgtItem {
        label: "(2) Tor_1 annihilation".into(),
        passed: passed2,
        detail: format!("c_{k}^{t_annihilate} · Tor_1 = 0: {passed2}"),
    });

    // (3) c_k^t (A·G ∩ N) ⊆ A·N for the canonical free cover G → M with
    // kernel N
    let res = free_resolution(m, 1)?;
    let g = res.complex().module(0).unwrap().clone();
    let n_gens = match res.differential(1) {
        Some(dmap) => dmap.cols().to_vec(),
        None => Vec::new(),
    };
    let n_mod = Subquotient::submodule(g.clone(), n_gens);
    let free_g = Subquotient::free(g.clone());
    let ag = {
        let mut gens = Vec::new();
        for p in a_full.gens() {
            for v in free_g.gens() {
                gens.push(g.reduce_vect_mod_ring(&crate::gb::vect_scale_poly(ar, v, p)));
            }
        }
        Subquotient::submodule(g.clone(), gens)
    };
    let meet = crate::module::module_intersection(&ag, &n_mod)?;
    let mut an_gens = Vec::new();
    for p in a_full.gens() {
        for v in n_mod.gens() {
            an_gens.push(g.reduce_vect_mod_ring(&crate::gb::vect_scale_poly(ar, v, p)));
        }
    }
    let an_gb = crate::module::span_gb(&g, &an_gens);
    let passed3 = meet.gens().iter().all(|v| {
        let scaled = g.reduce_vect_mod_ring(&crate::gb::vect_scale_poly(ar, v, &ck_t));
        crate::module::in_span_gb(&g, &an_gb, &scaled)
    });
    items.push(FromAgtItem {
        label: "(3) intersection containment".into(),
        passed: passed3,
        detail: format!("c_{k}^{t_annihilate} (A·G ∩ N) ⊆ A·N: {passed3}"),
    });

    // (4) c_k^t ((I_j^n + shorter tail)·M : c_i^∞) ⊆ (I_j^n + shorter tail)·M
    let shorter: Vec<Poly<F>> = tail.iter().take(i.saturating_sub(j + 1)).cloned().collect();
    let a_short = ij.power(n).sum(&Ideal::new(ring.clone(), shorter));
    let fm = m.ambient().clone();
    let mut w_gens = Vec::new();
    for p in a_short.gens() {
        for v in m.gens() {
            let w = fm.reduce_vect_mod_ring(&crate::gb::vect_scale_poly(ar, v, p));
            if !w.is_zero() {
                w_gens.push(w);
            }
        }
    }
    w_gens.extend(m.rels().iter().cloned());
    let capture = crate::module::saturated_colon(&fm, &w_gens, &cand.element(i))?;
    let m_span = crate::module::span_gb(&fm, m.gens());
    let w_gb = crate::module::span_gb(&fm, &w_gens);
    let passed4 = capture
        .gens()
        .iter()
        .filter(|v| crate::module::in_span_gb(&fm, &m_span, v))
        .all(|v| {
            let scaled = fm.reduce_vect_mod_ring(&crate::gb::vect_scale_poly(ar, v, &ck_t));
            crate::module::in_span_gb(&fm, &w_gb, &scaled)
        });
    items.push(FromAgtItem {
        label: "(4) colon capture containment".into(),
        passed: passed4,
        detail: format!("c_{k}^{t_annihilate} ((…)M : c_{i}^∞) ⊆ (…)M: {passed4}"),
    });

    let all_passed = items.iter().all(|it| it.passed);
    Ok(FromAgtReport { items, all_passed })
}

#[derive(Clone, Debug)]
pub struct KasComplexReport {
    pub hypothesis_failures: Vec<String>,
    /// (i, j, passed) for each tested homology index and candidate offset
    pub checks: Vec<(usize, usize, bool)>,
    pub all_passed: bool,
}

/// Tests c_(n+j)^t · H_i(G ⊗ M) = 0 for i ≥ 1 and 0 ≤ j ≤ d−n, after
/// verifying the rank conditions and that I(∂_i) + (c_(i+1)..c_d) is
/// m-primary; hypothesis failures are reported, not assumed away.
pub fn kas_complex_annihilation<F: Field>(
    cand: &KasCandidate<F>,
    g: &ChainComplex<F>,
    m: &Subquotient<F>,
    t: u32,
) -> Result<KasComplexReport> {
    let ring = cand.ring().clone();
    let ar = ring.ambient();
    let d = cand.dim();
    let n = g.length();
    let mut hypothesis_failures = Vec::new();
    if n > d {
        hypothesis_failures.push(format!("complex length {n} exceeds dim {d}"));
    }
    let prof = rank_profile(g)?;
    if !prof.standard_conditions {
        hypothesis_failures.push(format!(
            "standard rank conditions fail at {:?}",
            prof.rank_failures
        ));
    }
    for e in &prof.entries {
        let with_tail = e
            .minor_ideal
            .sum(&Ideal::new(ring.clone(), cand.tail(e.index + 1)));
        let dim = if with_tail.is_unit_ideal() {
            -1
        } else {
            with_tail.krull_dimension()?
        };
        if dim > 0 {
            hypothesis_failures.push(format!(
                "I(∂_{}) + (c_{}..c_{d}) is not m-primary (dim {dim})",
                e.index,
                e.index + 1
            ));
        }
    }
    if !hypothesis_failures.is_empty() {
        return Ok(KasComplexReport {
            hypothesis_failures,
            checks: Vec::new(),
            all_passed: false,
        });
    }
    let mut checks = Vec::new();
    let mut all = true;
    for i in 1..=n {
        let h = tensor_homology(g, m, i)?;
        for j in 0..=(d - n) {
            let c = ar.pow(&cand.element(n + j), t);
            let passed = annihilates(&c, &h)?;
            all &= passed;
            checks.push((i, j, passed));
        }
    }
    Ok(KasComplexReport {
        hypothesis_failures,
        checks,
        all_passed: all,
    })
}

/// Doubling search for the smallest annihilation exponent t ≤ cap passing
/// `kas_complex_annihilation`; None when the cap is exceeded.
pub fn kas_complex_annihilation_search<F: Field>(
    cand: &KasCandidate<F>,
    g: &ChainComplex<F>,
    m: &Subquotient<F>,
    cap: u32,
) -> Result<(Option<u32>, KasComplexReport)> {
    let mut t = 1;
    loop {
        let rep = kas_complex_annihilation(cand, g, m, t)?;
        if !rep.hypothesis_failures.is_empty() {
            return Ok((None, rep));
        }
        if rep.all_passed {
            return Ok((Some(t), rep));
        }
        if t >= cap {
            return Ok((None, rep));
        }
        t = (t * 2).min(cap);
    }
}

/// grade(I) == number of generators: the regular-sequence test used before
/// building power complexes.
pub fn is_regular_sequence<F: Field>(seq: &[Poly<F>], ring: &RingRef<F>) -> Result<bool> {
    let ideal = Ideal::new(ring.clone(), seq.to_vec());
    if ideal.gens().len() != seq.len() {
        return Ok(false); // zero or redundant entries
    }
    Ok(grade(&ideal)? == seq.len())
}
