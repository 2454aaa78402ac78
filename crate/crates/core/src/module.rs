//! Graded modules as subquotients of free modules: module Groebner bases,
//! syzygies, kernels, intersections, colon modules, annihilators, and graded
//! dimensions.
//!
//! Internally a submodule of R^r (R = S/Q) is always handled as the lifted
//! S-submodule spanned by its generators together with Q·e_c for every basis
//! vector; all kernels and memberships reduce to the ambient-ring engine.

use crate::field::Field;
use crate::gb::{self, Vect};
use crate::ideal::Ideal;
use crate::poly::Poly;
use crate::ring::RingRef;
use crate::{Error, Result};

/// A graded free module over a quotient ring: R(-t_1) ⊕ ... ⊕ R(-t_r),
/// `twists[i]` being the degree of the i-th basis vector.
#[derive(Clone, Debug)]
pub struct FreeModule<F: Field> {
    ring: RingRef<F>,
    twists: Vec<i64>,
}

impl<F: Field> FreeModule<F> {
    pub fn new(ring: RingRef<F>, twists: Vec<i64>) -> Self {
        FreeModule { ring, twists }
    }

    pub fn standard(ring: RingRef<F>, rank: usize) -> Self {
        FreeModule {
            ring,
            twists: vec![0; rank],
        }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn same(&self, other: &FreeModule<F>) -> bool {
        self.ring.same(&other.ring) && self.twists == other.twists
    }

    pub fn basis_vect(&self, i: usize) -> Vect<F> {
        Vect::unit(self.rank(), i, self.ring.ambient().one_poly())
    }

    /// Q·e_c for every defining generator q and basis vector e_c: the lift
    /// of the zero submodule of R^r to the ambient ring.
    pub fn ring_relation_vects(&self) -> Vec<Vect<F>> {
        let mut out = Vec::new();
        for q in self.ring.defining() {
            for c in 0..self.rank() {
                out.push(Vect::unit(self.rank(), c, q.clone()));
            }
        }
        out
    }

    /// Homogeneous degree of a vector: deg(v_c) + twist_c, equal across all
    /// nonzero components. None for the zero vector or inhomogeneous data.
    pub fn vect_degree(&self, v: &Vect<F>) -> Option<i64> {
        let ar = self.ring.ambient();
        let mut deg: Option<i64> = None;
        for (c, p) in v.comps.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !ar.is_homogeneous_poly(p) {
                return None;
            }
            let d = ar.degree(p).unwrap() + self.twists[c];
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous_vect(&self, v: &Vect<F>) -> bool {
        v.is_zero() || self.vect_degree(v).is_some()
    }

    pub fn reduce_vect_mod_ring(&self, v: &Vect<F>) -> Vect<F> {
        Vect {
            comps: v.comps.iter().map(|p| self.ring.reduce(p)).collect(),
        }
    }

    pub fn fmt_vect(&self, v: &Vect<F>) -> String {
        let parts: Vec<String> = v
            .comps
            .iter()
            .map(|p| self.ring.fmt_poly(p))
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// A map of free modules, stored column-major: column c is the image of the
/// c-th basis vector of the source, entries in normal form.
#[derive(Clone, Debug)]
pub struct ModuleMap<F: Field> {
    source: FreeModule<F>,
    target: FreeModule<F>,
    cols: Vec<Vect<F>>,
}

impl<F: Field> ModuleMap<F> {
    pub fn new(source: FreeModule<F>, target: FreeModule<F>, cols: Vec<Vect<F>>) -> Result<Self> {
        if cols.len() != source.rank() {
            return Err(Error::precondition(format!(
                "map has {} columns for a source of rank {}",
                cols.len(),
                source.rank()
            )));
        }
        for v in &cols {
            if v.rank() != target.rank() {
                return Err(Error::precondition("column rank != target rank"));
            }
        }
        if !source.ring().same(target.ring()) {
            return Err(Error::ring_mismatch("map across different rings"));
        }
        let cols = cols
            .iter()
            .map(|v| target.reduce_vect_mod_ring(v))
            .collect();
        Ok(ModuleMap {
            source,
            target,
            cols,
        })
    }

    /// Build from row-major entries (entries[r][c]).
    pub fn from_rows(
        source: FreeModule<F>,
        target: FreeModule<F>,
        rows: &[Vec<Poly<F>>],
    ) -> Result<Self> {
        if rows.len() != target.rank() {
            return Err(Error::precondition("row count != target rank"));
        }
        let mut cols = vec![Vect::zero(target.rank()); source.rank()];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != source.rank() {
                return Err(Error::precondition("column count != source rank"));
            }
            for (c, e) in row.iter().enumerate() {
                cols[c].comps[r] = e.clone();
            }
        }
        ModuleMap::new(source, target, cols)
    }

    pub fn zero(source: FreeModule<F>, target: FreeModule<F>) -> Self {
        let cols = vec![Vect::zero(target.rank()); source.rank()];
        ModuleMap {
            source,
            target,
            cols,
        }
    }

    pub fn identity(fm: &FreeModule<F>) -> Self {
        let cols = (0..fm.rank()).map(|i| fm.basis_vect(i)).collect();
        ModuleMap {
            source: fm.clone(),
            target: fm.clone(),
            cols,
        }
    }

    pub fn source(&self) -> &FreeModule<F> {
        &self.source
    }

    pub fn target(&self) -> &FreeModule<F> {
        &self.target
    }

    pub fn ring(&self) -> &RingRef<F> {
        self.source.ring()
    }

    pub fn cols(&self) -> &[Vect<F>] {
        &self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Poly<F> {
        &self.cols[c].comps[r]
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|v| v.is_zero())
    }

    /// Apply to a vector in source coordinates.
    pub fn apply(&self, v: &Vect<F>) -> Vect<F> {
        let ar = self.ring().ambient();
        let mut out = Vect::zero(self.target.rank());
        for (c, p) in v.comps.iter().enumerate() {
            if !p.is_zero() {
                out = gb::vect_add(ar, &out, &gb::vect_scale_poly(ar, &self.cols[c], p));
            }
        }
        self.target.reduce_vect_mod_ring(&out)
    }

    /// self ∘ other.
    pub fn compose(&self, other: &ModuleMap<F>) -> Result<ModuleMap<F>> {
        if other.target.rank() != self.source.rank() {
            return Err(Error::precondition("composition rank mismatch"));
        }
        let cols = other.cols.iter().map(|v| self.apply(v)).collect();
        ModuleMap::new(other.source.clone(), self.target.clone(), cols)
    }

    /// Every entry matches the twist difference (graded of degree 0).
    pub fn is_graded(&self) -> bool {
        let ar = self.ring().ambient();
        for (c, col) in self.cols.iter().enumerate() {
            for (r, e) in col.comps.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                if !ar.is_homogeneous_poly(e)
                    || ar.degree(e).unwrap() != self.source.twists()[c] - self.target.twists()[r]
                {
                    return false;
                }
            }
        }
        true
    }

    /// The dual map Hom(-, R): transposed matrix between the dual modules
    /// (negated twists).
    pub fn transpose(&self) -> ModuleMap<F> {
        let dual_src = FreeModule::new(
            self.ring().clone(),
            self.target.twists().iter().map(|t| -t).collect(),
        );
        let dual_tgt = FreeModule::new(
            self.ring().clone(),
            self.source.twists().iter().map(|t| -t).collect(),
        );
        let mut cols = vec![Vect::zero(self.source.rank()); self.target.rank()];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, e) in col.comps.iter().enumerate() {
                cols[r].comps[c] = e.clone();
            }
        }
        ModuleMap {
            source: dual_src,
            target: dual_tgt,
            cols,
        }
    }
}

/// A finitely generated module presented as (span of generators)/(span of
/// relations) inside a graded free module. A subquotient with no relations
/// is a submodule; one whose generators are the standard basis is a
/// quotient of the free module.
#[derive(Clone, Debug)]
pub struct Subquotient<F: Field> {
    ambient: FreeModule<F>,
    gens: Vec<Vect<F>>,
    rels: Vec<Vect<F>>,
}

impl<F: Field> Subquotient<F> {
    /// Checks that the relations lie in the span of the generators.
    pub fn new(ambient: FreeModule<F>, gens: Vec<Vect<F>>, rels: Vec<Vect<F>>) -> Result<Self> {
        let sq = Subquotient::new_unchecked(ambient, gens, rels);
        let span = span_gb(&sq.ambient, &sq.gens);
        for r in &sq.rels {
            if !in_span_gb(&sq.ambient, &span, r) {
                return Err(Error::precondition(format!(
                    "relation {} outside the generator span",
                    sq.ambient.fmt_vect(r)
                )));
            }
        }
        Ok(sq)
    }

    pub fn new_unchecked(
        ambient: FreeModule<F>,
        gens: Vec<Vect<F>>,
        rels: Vec<Vect<F>>,
    ) -> Self {
        let gens = gens
            .iter()
            .map(|v| ambient.reduce_vect_mod_ring(v))
            .filter(|v| !v.is_zero())
            .collect();
        let rels = rels
            .iter()
            .map(|v| ambient.reduce_vect_mod_ring(v))
            .filter(|v| !v.is_zero())
            .collect();
        Subquotient {
            ambient,
            gens,
            rels,
        }
    }

    /// The free module itself.
    pub fn free(fm: FreeModule<F>) -> Self {
        let gens = (0..fm.rank()).map(|i| fm.basis_vect(i)).collect();
        Subquotient {
            ambient: fm,
            gens,
            rels: Vec::new(),
        }
    }

    /// F/(relations).
    pub fn quotient_of_free(fm: FreeModule<F>, rels: Vec<Vect<F>>) -> Self {
        let gens = (0..fm.rank()).map(|i| fm.basis_vect(i)).collect();
        Subquotient::new_unchecked(fm, gens, rels)
    }

    /// Submodule spanned by `gens`.
    pub fn submodule(fm: FreeModule<F>, gens: Vec<Vect<F>>) -> Self {
        Subquotient::new_unchecked(fm, gens, Vec::new())
    }

    /// R/I as a cyclic module in R^1.
    pub fn cyclic(ideal: &Ideal<F>) -> Self {
        let fm = FreeModule::standard(ideal.ring().clone(), 1);
        let rels = ideal
            .gens()
            .iter()
            .map(|g| Vect::from_poly(g.clone()))
            .collect();
        Subquotient::quotient_of_free(fm, rels)
    }

    pub fn zero(ring: RingRef<F>) -> Self {
        Subquotient {
            ambient: FreeModule::standard(ring, 1),
            gens: Vec::new(),
            rels: Vec::new(),
        }
    }

    pub fn ambient(&self) -> &FreeModule<F> {
        &self.ambient
    }

    pub fn ring(&self) -> &RingRef<F> {
        self.ambient.ring()
    }

    pub fn gens(&self) -> &[Vect<F>] {
        &self.gens
    }

    pub fn rels(&self) -> &[Vect<F>] {
        &self.rels
    }

    pub fn is_submodule(&self) -> bool {
        self.rels.is_empty()
    }

    /// Groebner basis of the lifted numerator span(gens) + Q·F.
    pub fn numerator_gb(&self) -> Vec<Vect<F>> {
        span_gb(&self.ambient, &self.gens)
    }

    /// Groebner basis of the lifted denominator span(rels) + Q·F.
    pub fn denominator_gb(&self) -> Vec<Vect<F>> {
        span_gb(&self.ambient, &self.rels)
    }

    /// v ∈ span(generators) + span(relations)?
    pub fn membership(&self, v: &Vect<F>) -> Result<bool> {
        if v.rank() != self.ambient.rank() {
            return Err(Error::precondition(format!(
                "vector rank {} != ambient rank {}",
                v.rank(),
                self.ambient.rank()
            )));
        }
        let mut all = self.gens.clone();
        all.extend(self.rels.iter().cloned());
        let basis = span_gb(&self.ambient, &all);
        Ok(in_span_gb(&self.ambient, &basis, v))
    }

    /// The module is zero iff every generator lies in the relation span.
    pub fn is_zero_module(&self) -> bool {
        if self.gens.is_empty() {
            return true;
        }
        let den = self.denominator_gb();
        self.gens
            .iter()
            .all(|g| in_span_gb(&self.ambient, &den, g))
    }

    /// Graded dimension dim_k (gens-span)_e - dim_k (rels-span)_e per degree.
    pub fn hilbert_function(&self, lo: i64, hi: i64) -> Result<Vec<u64>> {
        for v in self.gens.iter().chain(&self.rels) {
            if !self.ambient.is_homogeneous_vect(v) {
                return Err(Error::NotHomogeneous(
                    "module Hilbert function needs homogeneous data".into(),
                ));
            }
        }
        let num = self.numerator_gb();
        let den = self.denominator_gb();
        let mut out = Vec::new();
        for e in lo..=hi {
            let n = count_span_monomials(&self.ambient, &num, e);
            let d = count_span_monomials(&self.ambient, &den, e);
            debug_assert!(n >= d);
            out.push(n - d);
        }
        Ok(out)
    }

    /// Total dimension over a window (callers pick a window that provably
    /// contains every nonzero degree).
    pub fn total_dimension(&self, lo: i64, hi: i64) -> Result<u64> {
        Ok(self.hilbert_function(lo, hi)?.into_iter().sum())
    }

    /// Annihilator {r ∈ R | r·M ⊆ relation span}: intersection of the colon
    /// ideals (rels : g) over the generators.
    pub fn annihilator(&self) -> Result<Ideal<F>> {
        let ring = self.ring().clone();
        if self.gens.is_empty() {
            return Ok(Ideal::new(ring.clone(), vec![ring.ambient().one_poly()]));
        }
        let mut acc: Option<Ideal<F>> = None;
        for g in &self.gens {
            let colon = colon_ideal_of_vector(&self.ambient, &self.rels, g);
            acc = Some(match acc {
                None => colon,
                Some(a) => a.intersect(&colon)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Multiply every generator by a ring element (the subquotient r·M with
    /// the same relations).
    pub fn scale_gens(&self, f: &Poly<F>) -> Subquotient<F> {
        let ar = self.ring().ambient();
        let gens = self
            .gens
            .iter()
            .map(|g| gb::vect_scale_poly(ar, g, f))
            .collect();
        Subquotient::new_unchecked(self.ambient.clone(), gens, self.rels.clone())
    }

    /// Minimal homogeneous generators: drop any generator lying in the span
    /// of the others plus the relations (graded Nakayama).
    pub fn pruned_generators(&self) -> Vec<Vect<F>> {
        minimal_generators(&self.ambient, &self.gens, &self.rels)
    }
}

/// GB of span(vects) + Q·F over the ambient polynomial ring.
pub(crate) fn span_gb<F: Field>(fm: &FreeModule<F>, vects: &[Vect<F>]) -> Vec<Vect<F>> {
    let mut all: Vec<Vect<F>> = vects.to_vec();
    all.extend(fm.ring_relation_vects());
    gb::reduced_module_gb(fm.ring().ambient(), fm.twists(), &all)
}

pub(crate) fn in_span_gb<F: Field>(fm: &FreeModule<F>, basis: &[Vect<F>], v: &Vect<F>) -> bool {
    gb::reduce_vect(fm.ring().ambient(), basis, v).is_zero()
}

/// Number of monomials x^a·e_c of degree e inside the initial module of the
/// span (used for graded dimensions of submodules).
fn count_span_monomials<F: Field>(fm: &FreeModule<F>, basis: &[Vect<F>], e: i64) -> u64 {
    let ar = fm.ring().ambient();
    let mut count = 0u64;
    for c in 0..fm.rank() {
        let leads: Vec<_> = basis
            .iter()
            .filter_map(|v| v.lead())
            .filter(|(lc, _, _)| *lc == c)
            .map(|(_, m, _)| m.clone())
            .collect();
        for m in ar.monomials_of_degree(e - fm.twists()[c]) {
            if leads.iter().any(|l| l.divides(&m)) {
                count += 1;
            }
        }
    }
    count
}

/// The colon ideal (span(rels) + Q·F : v) = {r ∈ R | r·v ∈ span + Q·F}.
pub(crate) fn colon_ideal_of_vector<F: Field>(
    fm: &FreeModule<F>,
    span: &[Vect<F>],
    v: &Vect<F>,
) -> Ideal<F> {
    let ring = fm.ring();
    let ar = ring.ambient();
    let mut cols: Vec<Vect<F>> = vec![v.clone()];
    cols.extend(span.iter().cloned());
    cols.extend(fm.ring_relation_vects());
    let syz = gb::syzygies_of(ar, fm.twists(), &cols);
    let gens: Vec<Poly<F>> = syz
        .into_iter()
        .map(|s| s.comps.into_iter().next().unwrap())
        .collect();
    Ideal::new(ring.clone(), gens)
}

/// Generators of the kernel of a map of free modules over R, via syzygies of
/// the lifted columns; every returned vector v satisfies phi(v) = 0 in R.
pub fn kernel_gens<F: Field>(phi: &ModuleMap<F>) -> Vec<Vect<F>> {
    let ring = phi.ring();
    let ar = ring.ambient();
    let ncols = phi.cols().len();
    let mut ext: Vec<Vect<F>> = phi.cols().to_vec();
    ext.extend(phi.target().ring_relation_vects());
    let syz = gb::syzygies_of(ar, phi.target().twists(), &ext);
    let mut out: Vec<Vect<F>> = Vec::new();
    for s in syz {
        let v = Vect {
            comps: s.comps[..ncols]
                .iter()
                .map(|p| ring.reduce(p))
                .collect(),
        };
        if !v.is_zero() && !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// The kernel as a map: syzygy columns generate ker(phi) ⊆ source(phi),
/// with source twists read off from the (graded) kernel generators.
pub fn syzygy_matrix<F: Field>(phi: &ModuleMap<F>) -> ModuleMap<F> {
    let gens = kernel_gens(phi);
    let src = phi.source();
    let twists: Vec<i64> = gens
        .iter()
        .map(|v| src.vect_degree(v).unwrap_or(0))
        .collect();
    let new_src = FreeModule::new(phi.ring().clone(), twists);
    ModuleMap {
        source: new_src,
        target: src.clone(),
        cols: gens,
    }
}

/// Intersection of two submodules of a common free module via syzygies of
/// the concatenated generator matrices.
pub fn module_intersection<F: Field>(
    n1: &Subquotient<F>,
    n2: &Subquotient<F>,
) -> Result<Subquotient<F>> {
    if !n1.is_submodule() || !n2.is_submodule() {
        return Err(Error::precondition(
            "module intersection expects submodules (no relations)",
        ));
    }
    if !n1.ambient().same(n2.ambient()) {
        return Err(Error::ring_mismatch("intersection across different ambients"));
    }
    let fm = n1.ambient();
    let ring = fm.ring();
    let ar = ring.ambient();

    let a = n1.gens();
    let mut cols: Vec<Vect<F>> = a.to_vec();
    cols.extend(n2.gens().iter().cloned());
    cols.extend(fm.ring_relation_vects());

    let syz = gb::syzygies_of(ar, fm.twists(), &cols);
    let mut gens: Vec<Vect<F>> = Vec::new();
    for s in syz {
        let mut elt = Vect::zero(fm.rank());
        for (i, coeff) in s.comps[..a.len()].iter().enumerate() {
            if !coeff.is_zero() {
                elt = gb::vect_add(ar, &elt, &gb::vect_scale_poly(ar, &a[i], coeff));
            }
        }
        let elt = fm.reduce_vect_mod_ring(&elt);
        if !elt.is_zero() && !gens.contains(&elt) {
            gens.push(elt);
        }
    }
    let result = Subquotient::submodule(fm.clone(), gens);
    #[cfg(debug_assertions)]
    {
        for g in result.gens() {
            debug_assert!(n1.membership(g).unwrap(), "intersection outside first module");
            debug_assert!(n2.membership(g).unwrap(), "intersection outside second module");
        }
    }
    Ok(result)
}

/// {v ∈ F | f·v ∈ span(W) + Q·F}: a single colon step of a submodule by a
/// ring element.
pub fn submodule_colon_poly<F: Field>(
    fm: &FreeModule<F>,
    span: &[Vect<F>],
    f: &Poly<F>,
) -> Vec<Vect<F>> {
    let ring = fm.ring();
    let ar = ring.ambient();
    let rank = fm.rank();
    let mut cols: Vec<Vect<F>> = (0..rank)
        .map(|c| Vect::unit(rank, c, f.clone()))
        .collect();
    cols.extend(span.iter().cloned());
    cols.extend(fm.ring_relation_vects());
    let syz = gb::syzygies_of(ar, fm.twists(), &cols);
    let mut out = Vec::new();
    for s in syz {
        let v = Vect {
            comps: s.comps[..rank].iter().map(|p| ring.reduce(p)).collect(),
        };
        if !v.is_zero() && !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// Saturation-style colon capture {v | f^s·v ∈ J·N-span for some s},
/// iterating the single colon until the span stabilizes.
pub fn colon_capture<F: Field>(
    n: &Subquotient<F>,
    j: &Ideal<F>,
    f: &Poly<F>,
) -> Result<Subquotient<F>> {
    if !n.is_submodule() {
        return Err(Error::precondition("colon capture expects a submodule"));
    }
    let fr = n.ring().reduce(f);
    if fr.is_zero() {
        return Err(Error::precondition("colon capture by zero"));
    }
    let fm = n.ambient();
    let ar = n.ring().ambient();
    // J·N
    let mut w: Vec<Vect<F>> = Vec::new();
    for jg in j.gens() {
        for ng in n.gens() {
            let v = fm.reduce_vect_mod_ring(&gb::vect_scale_poly(ar, ng, jg));
            if !v.is_zero() {
                w.push(v);
            }
        }
    }
    saturated_colon(fm, &w, &fr)
}

/// (span(W) + Q·F : f^∞) as a submodule of F.
pub fn saturated_colon<F: Field>(
    fm: &FreeModule<F>,
    w: &[Vect<F>],
    f: &Poly<F>,
) -> Result<Subquotient<F>> {
    let mut cur = w.to_vec();
    let mut cur_gb = span_gb(fm, &cur);
    for _ in 0..64 {
        let next = submodule_colon_poly(fm, &cur, f);
        if next.iter().all(|v| in_span_gb(fm, &cur_gb, v)) {
            return Ok(Subquotient::submodule(fm.clone(), next));
        }
        cur = next;
        cur_gb = span_gb(fm, &cur);
    }
    Err(Error::SearchFailed(
        "colon capture did not stabilize in 64 iterations".into(),
    ))
}

/// Minimal homogeneous generators of span(gens) modulo span(extra) + Q·F:
/// greedily drop generators contained in the span of the remaining ones.
pub fn minimal_generators<F: Field>(
    fm: &FreeModule<F>,
    gens: &[Vect<F>],
    extra: &[Vect<F>],
) -> Vec<Vect<F>> {
    let mut items: Vec<Vect<F>> = gens
        .iter()
        .map(|v| fm.reduce_vect_mod_ring(v))
        .filter(|v| !v.is_zero())
        .collect();
    // dedupe exact copies up front
    let mut seen: Vec<Vect<F>> = Vec::new();
    items.retain(|v| {
        if seen.contains(v) {
            false
        } else {
            seen.push(v.clone());
            true
        }
    });
    // highest degree first: redundant high-degree generators go first
    let mut order: Vec<usize> = (0..items.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(fm.vect_degree(&items[i]).unwrap_or(i64::MAX)));

    let mut keep = vec![true; items.len()];
    for &i in &order {
        let mut others: Vec<Vect<F>> = items
            .iter()
            .enumerate()
            .filter_map(|(j, v)| (j != i && keep[j]).then(|| v.clone()))
            .collect();
        others.extend(extra.iter().cloned());
        let basis = span_gb(fm, &others);
        if in_span_gb(fm, &basis, &items[i]) {
            keep[i] = false;
        }
    }
    items
        .into_iter()
        .zip(keep)
        .filter_map(|(v, k)| k.then_some(v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_poly;
    use crate::ring::{PolyRing, QuotientRing};

    fn k_xy() -> RingRef<Rationals> {
        QuotientRing::polynomial_ring(
            PolyRing::new(Rationals, &["x", "y"], MonomialOrder::GrevLex, None).unwrap(),
        )
    }

    fn p(r: &RingRef<Rationals>, s: &str) -> Poly<Rationals> {
        parse_poly(r.ambient(), s).unwrap()
    }

    #[test]
    fn syzygy_matrix_of_row() {
        let r = k_xy();
        let f0 = FreeModule::standard(r.clone(), 1);
        // phi = (x y): R(-1)^2 -> R
        let src = FreeModule::new(r.clone(), vec![1, 1]);
        let phi = ModuleMap::new(
            src,
            f0,
            vec![
                Vect::from_poly(p(&r, "x")),
                Vect::from_poly(p(&r, "y")),
            ],
        )
        .unwrap();
        assert!(phi.is_graded());
        let syz = syzygy_matrix(&phi);
        assert_eq!(syz.cols().len(), 1);
        // phi ∘ syz = 0
        let comp = phi.compose(&syz).unwrap();
        assert!(comp.is_zero());
        assert_eq!(syz.source().twists(), &[2]);
    }

    #[test]
    fn syzygy_of_x2_xy() {
        let r = k_xy();
        let f0 = FreeModule::standard(r.clone(), 1);
        let src = FreeModule::new(r.clone(), vec![2, 2]);
        let phi = ModuleMap::new(
            src,
            f0,
            vec![
                Vect::from_poly(p(&r, "x^2")),
                Vect::from_poly(p(&r, "x*y")),
            ],
        )
        .unwrap();
        let syz = syzygy_matrix(&phi);
        // kernel generated by (y, -x); the raw column list may repeat it
        let target = Vect {
            comps: vec![p(&r, "y"), p(&r, "-x")],
        };
        let span = span_gb(syz.target(), syz.cols());
        assert!(in_span_gb(syz.target(), &span, &target));
        assert!(phi.compose(&syz).unwrap().is_zero());
    }

    #[test]
    fn identity_kernel_trivial() {
        let r = k_xy();
        let fm = FreeModule::standard(r.clone(), 2);
        let id = ModuleMap::identity(&fm);
        assert!(kernel_gens(&id).is_empty());
    }

    #[test]
    fn module_intersection_examples() {
        let r = k_xy();
        let fm = FreeModule::standard(r.clone(), 1);
        let nx = Subquotient::submodule(fm.clone(), vec![Vect::from_poly(p(&r, "x"))]);
        let ny = Subquotient::submodule(fm.clone(), vec![Vect::from_poly(p(&r, "y"))]);
        let meet = module_intersection(&nx, &ny).unwrap();
        let expect = Vect::from_poly(p(&r, "x*y"));
        assert!(meet.membership(&expect).unwrap());
        let span = span_gb(&fm, meet.gens());
        assert!(in_span_gb(&fm, &span, &expect));

        // column spans in R^2
        let fm2 = FreeModule::standard(r.clone(), 2);
        let n1 = Subquotient::submodule(
            fm2.clone(),
            vec![
                Vect {
                    comps: vec![p(&r, "x"), r.ambient().zero_poly()],
                },
                Vect {
                    comps: vec![r.ambient().zero_poly(), p(&r, "y")],
                },
            ],
        );
        let n2 = Subquotient::submodule(
            fm2.clone(),
            vec![Vect {
                comps: vec![p(&r, "1"), p(&r, "1")],
            }],
        );
        let meet = module_intersection(&n1, &n2).unwrap();
        let diag = Vect {
            comps: vec![p(&r, "x*y"), p(&r, "x*y")],
        };
        let span = span_gb(&fm2, meet.gens());
        assert!(in_span_gb(&fm2, &span, &diag));
        // and every generator is a multiple of the diagonal xy
        let dspan = span_gb(&fm2, &[diag]);
        for g in meet.gens() {
            assert!(in_span_gb(&fm2, &dspan, g));
        }

        // idempotence up to span equality
        let meet = module_intersection(&n1, &n1).unwrap();
        let s1 = span_gb(&fm2, n1.gens());
        let s2 = span_gb(&fm2, meet.gens());
        assert_eq!(s1, s2);
    }

    #[test]
    fn membership_examples() {
        let r = k_xy();
        let fm2 = FreeModule::standard(r.clone(), 2);
        let n = Subquotient::submodule(
            fm2.clone(),
            vec![
                Vect {
                    comps: vec![p(&r, "x"), r.ambient().zero_poly()],
                },
                Vect {
                    comps: vec![r.ambient().zero_poly(), p(&r, "y")],
                },
            ],
        );
        let v = Vect {
            comps: vec![p(&r, "x*y"), p(&r, "x*y")],
        };
        assert!(n.membership(&v).unwrap());
        let w = Vect {
            comps: vec![p(&r, "1"), r.ambient().zero_poly()],
        };
        assert!(!n.membership(&w).unwrap());
        assert!(n.membership(&Vect::zero(2)).unwrap());
    }

    #[test]
    fn annihilator_examples() {
        let r = k_xy();
        // R/(x^2, xy) as a cyclic module
        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let m = Subquotient::cyclic(&i);
        let ann = m.annihilator().unwrap();
        assert!(ann.equals(&i));

        // R^1 / span{(x)}
        let fm = FreeModule::standard(r.clone(), 1);
        let m = Subquotient::quotient_of_free(fm, vec![Vect::from_poly(p(&r, "x"))]);
        let ann = m.annihilator().unwrap();
        assert!(ann.equals(&Ideal::parse(&r, &["x"]).unwrap()));
    }

    #[test]
    fn colon_capture_examples() {
        let r = k_xy();
        let fm = FreeModule::standard(r.clone(), 1);
        let n = Subquotient::free(fm.clone());

        // ((x^2)R : x^∞) = R
        let j = Ideal::parse(&r, &["x^2"]).unwrap();
        let cap = colon_capture(&n, &j, &p(&r, "x")).unwrap();
        assert!(cap.membership(&Vect::from_poly(p(&r, "1"))).unwrap());

        // ((x^2 y)R : y^∞) = (x^2)
        let j = Ideal::parse(&r, &["x^2*y"]).unwrap();
        let cap = colon_capture(&n, &j, &p(&r, "y")).unwrap();
        let span = span_gb(&fm, cap.gens());
        assert!(in_span_gb(&fm, &span, &Vect::from_poly(p(&r, "x^2"))));
        assert!(!in_span_gb(&fm, &span, &Vect::from_poly(p(&r, "x"))));
    }

    #[test]
    fn hilbert_function_of_subquotients() {
        let r = k_xy();
        // R/(x,y)^2: 1, 2, 0
        let i = Ideal::parse(&r, &["x", "y"]).unwrap().power(2);
        let m = Subquotient::cyclic(&i);
        assert_eq!(m.hilbert_function(0, 2).unwrap(), vec![1, 2, 0]);

        // R(-1) over k[x]: 0, 1, 1
        let rx = QuotientRing::polynomial_ring(
            PolyRing::new(Rationals, &["x"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let fm = FreeModule::new(rx, vec![1]);
        let m = Subquotient::free(fm);
        assert_eq!(m.hilbert_function(0, 2).unwrap(), vec![0, 1, 1]);
    }

    #[test]
    fn minimal_generator_pruning() {
        let r = k_xy();
        let fm = FreeModule::standard(r.clone(), 1);
        // {x, y, x^2 + xy} -> x^2 + xy is redundant
        let gens = vec![
            Vect::from_poly(p(&r, "x")),
            Vect::from_poly(p(&r, "y")),
            Vect::from_poly(p(&r, "x^2 + x*y")),
        ];
        let min = minimal_generators(&fm, &gens, &[]);
        assert_eq!(min.len(), 2);
    }

    #[test]
    fn subquotient_relation_check() {
        let r = k_xy();
        let fm = FreeModule::standard(r.clone(), 1);
        // relation x outside span(x^2) is rejected
        let bad = Subquotient::new(
            fm.clone(),
            vec![Vect::from_poly(p(&r, "x^2"))],
            vec![Vect::from_poly(p(&r, "x"))],
        );
        assert!(bad.is_err());
        let good = Subquotient::new(
            fm,
            vec![Vect::from_poly(p(&r, "x"))],
            vec![Vect::from_poly(p(&r, "x^2"))],
        );
        assert!(good.is_ok());
    }

    #[test]
    fn quotient_ring_kernel_includes_defining_action() {
        // over R = k[x,y]/(xy), the kernel of (x): R -> R is (y)
        let ar = std::sync::Arc::new(
            PolyRing::new(Rationals, &["x", "y"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let xy = parse_poly(&ar, "x*y").unwrap();
        let r = QuotientRing::make(ar.clone(), &[xy]).unwrap();
        let fm = FreeModule::standard(r.clone(), 1);
        let src = FreeModule::new(r.clone(), vec![1]);
        let phi = ModuleMap::new(
            src,
            fm.clone(),
            vec![Vect::from_poly(parse_poly(&ar, "x").unwrap())],
        )
        .unwrap();
        let ker = kernel_gens(&phi);
        let span = span_gb(phi.source(), &ker);
        let y = Vect::from_poly(parse_poly(&ar, "y").unwrap());
        assert!(in_span_gb(phi.source(), &span, &y));
    }
}
