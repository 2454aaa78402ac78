//! Finite chain complexes of graded free modules: Koszul complexes, tensor
//! products, homology, determinantal rank data, grade, the rank/depth
//! exactness criterion, power complexes, and perturbation experiments.

use crate::field::Field;
use crate::gb::{self, Vect};
use crate::ideal::Ideal;
use crate::module::{
    in_span_gb, kernel_gens, minimal_generators, module_intersection, span_gb, FreeModule,
    ModuleMap, Subquotient,
};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::RingRef;
use crate::rng::labeled_rng;
use crate::{Error, Result};

/// 0 → G_n → … → G_1 → G_0 → 0: modules\[i\] is G_i and `diffs[i]` is
/// ∂_{i+1} : G_{i+1} → G_i. Construction checks ∂∘∂ = 0 and gradedness.
#[derive(Clone, Debug)]
pub struct ChainComplex<F: Field> {
    modules: Vec<FreeModule<F>>,
    diffs: Vec<ModuleMap<F>>,
}

impl<F: Field> ChainComplex<F> {
    pub fn new(modules: Vec<FreeModule<F>>, diffs: Vec<ModuleMap<F>>) -> Result<Self> {
        if modules.is_empty() {
            return Err(Error::precondition("a complex needs at least one module"));
        }
        if diffs.len() + 1 != modules.len() {
            return Err(Error::precondition("differential count != length"));
        }
        for (i, d) in diffs.iter().enumerate() {
            if !d.source().same(&modules[i + 1]) || !d.target().same(&modules[i]) {
                return Err(Error::precondition(format!(
                    "differential {} does not match its modules",
                    i + 1
                )));
            }
            if !d.is_graded() {
                return Err(Error::NotHomogeneous(format!(
                    "differential {} is not graded",
                    i + 1
                )));
            }
        }
        for i in 0..diffs.len().saturating_sub(1) {
            let comp = diffs[i].compose(&diffs[i + 1])?;
            if !comp.is_zero() {
                return Err(Error::precondition(format!(
                    "∂_{} ∘ ∂_{} != 0",
                    i + 1,
                    i + 2
                )));
            }
        }
        Ok(ChainComplex { modules, diffs })
    }

    /// Build from the differentials alone; modules are read off the maps.
    pub fn from_diffs(diffs: Vec<ModuleMap<F>>) -> Result<Self> {
        if diffs.is_empty() {
            return Err(Error::precondition("no differentials; use `single`"));
        }
        let mut modules = vec![diffs[0].target().clone()];
        for d in &diffs {
            modules.push(d.source().clone());
        }
        ChainComplex::new(modules, diffs)
    }

    pub fn single(fm: FreeModule<F>) -> Self {
        ChainComplex {
            modules: vec![fm],
            diffs: Vec::new(),
        }
    }

    /// Homological length n (top nonzero index).
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn module(&self, i: usize) -> Option<&FreeModule<F>> {
        self.modules.get(i)
    }

    pub fn modules(&self) -> &[FreeModule<F>] {
        &self.modules
    }

    /// ∂_i : G_i → G_{i-1}, for 1 ≤ i ≤ length.
    pub fn differential(&self, i: usize) -> Option<&ModuleMap<F>> {
        if i == 0 {
            None
        } else {
            self.diffs.get(i - 1)
        }
    }

    pub fn ring(&self) -> &RingRef<F> {
        self.modules[0].ring()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// H_i as a subquotient of G_i (ker ∂_i / im ∂_{i+1}); zero beyond the
    /// length.
    pub fn homology(&self, i: usize) -> Subquotient<F> {
        if i > self.length() {
            return Subquotient::zero(self.ring().clone());
        }
        let gens = match self.differential(i) {
            None => (0..self.modules[i].rank())
                .map(|k| self.modules[i].basis_vect(k))
                .collect(),
            Some(d) => kernel_gens(d),
        };
        let rels = match self.differential(i + 1) {
            None => Vec::new(),
            Some(d) => d.cols().to_vec(),
        };
        Subquotient::new_unchecked(self.modules[i].clone(), gens, rels)
    }

    pub fn homology_is_zero(&self, i: usize) -> bool {
        self.homology(i).is_zero_module()
    }

    /// All positive homology vanishes (H_0 unconstrained).
    pub fn is_acyclic(&self) -> bool {
        (1..=self.length()).all(|i| self.homology_is_zero(i))
    }
}

/// The Koszul complex K_•(f_1,…,f_n; R): rank C(n,i) in degree i, basis
/// indexed by i-subsets, twists the sums of the generator degrees.
pub fn koszul_complex<F: Field>(seq: &[Poly<F>], ring: &RingRef<F>) -> Result<ChainComplex<F>> {
    if seq.is_empty() {
        return Err(Error::precondition("empty sequence for a Koszul complex"));
    }
    let ar = ring.ambient();
    let seq: Vec<Poly<F>> = seq.iter().map(|f| ring.reduce(f)).collect();
    let mut degs = Vec::new();
    for f in &seq {
        if !ar.is_homogeneous_poly(f) || f.is_zero() {
            return Err(Error::NotHomogeneous(
                "Koszul complex needs nonzero homogeneous entries".into(),
            ));
        }
        degs.push(ar.degree(f).unwrap());
    }
    let n = seq.len();
    // subsets of {0..n-1} of each size, in ascending mask order
    let mut levels: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1u32 << n) {
        levels[mask.count_ones() as usize].push(mask);
    }
    let modules: Vec<FreeModule<F>> = levels
        .iter()
        .map(|masks| {
            let twists = masks
                .iter()
                .map(|&mask| {
                    (0..n)
                        .filter(|j| mask & (1 << j) != 0)
                        .map(|j| degs[j])
                        .sum()
                })
                .collect();
            FreeModule::new(ring.clone(), twists)
        })
        .collect();

    let mut diffs = Vec::new();
    for i in 1..=n {
        let src = &modules[i];
        let tgt = &modules[i - 1];
        let mut cols = Vec::with_capacity(levels[i].len());
        for &mask in &levels[i] {
            let mut col = Vect::zero(tgt.rank());
            let members: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
            for (pos, &j) in members.iter().enumerate() {
                let sub = mask & !(1 << j);
                let idx = levels[i - 1].binary_search(&sub).unwrap();
                let signed = if pos % 2 == 0 {
                    seq[j].clone()
                } else {
                    ar.neg(&seq[j])
                };
                col.comps[idx] = ar.add(&col.comps[idx], &signed);
            }
            cols.push(col);
        }
        diffs.push(ModuleMap::new(src.clone(), tgt.clone(), cols)?);
    }
    ChainComplex::new(modules, diffs)
}

/// Total complex of C ⊗ D with the usual sign (-1)^(degree of the first
/// factor) on the second differential.
pub fn tensor_complexes<F: Field>(
    c: &ChainComplex<F>,
    d: &ChainComplex<F>,
) -> Result<ChainComplex<F>> {
    if !c.ring().same(d.ring()) {
        return Err(Error::ring_mismatch("tensor across different rings"));
    }
    let ring = c.ring().clone();
    let ar = ring.ambient();
    let (lc, ld) = (c.length(), d.length());
    let total = lc + ld;

    // block (i, j) with i + j = k, ordered by ascending i
    let blocks_at = |k: usize| -> Vec<(usize, usize)> {
        (0..=k)
            .filter(|&i| i <= lc && k - i <= ld)
            .map(|i| (i, k - i))
            .collect()
    };
    let offset = |k: usize, bi: usize| -> usize {
        blocks_at(k)
            .iter()
            .take_while(|(i, _)| *i < bi)
            .map(|(i, j)| c.modules()[*i].rank() * d.modules()[*j].rank())
            .sum()
    };

    let mut modules = Vec::new();
    for k in 0..=total {
        let mut twists = Vec::new();
        for (i, j) in blocks_at(k) {
            for ta in c.modules()[i].twists() {
                for tb in d.modules()[j].twists() {
                    twists.push(ta + tb);
                }
            }
        }
        modules.push(FreeModule::new(ring.clone(), twists));
    }

    let mut diffs = Vec::new();
    for k in 1..=total {
        let src = &modules[k];
        let tgt = &modules[k - 1];
        let mut cols = vec![Vect::zero(tgt.rank()); src.rank()];
        for (i, j) in blocks_at(k) {
            let (rc, rd) = (c.modules()[i].rank(), d.modules()[j].rank());
            let base = offset(k, i);
            for a in 0..rc {
                for b in 0..rd {
                    let col_idx = base + a * rd + b;
                    // ∂_C ⊗ id: block (i-1, j)
                    if i >= 1 {
                        let dmap = c.differential(i).unwrap();
                        let tbase = offset(k - 1, i - 1);
                        let rd_t = rd;
                        for (r, e) in dmap.cols()[a].comps.iter().enumerate() {
                            if !e.is_zero() {
                                let t = tbase + r * rd_t + b;
                                cols[col_idx].comps[t] = ar.add(&cols[col_idx].comps[t], e);
                            }
                        }
                    }
                    // (-1)^i id ⊗ ∂_D: block (i, j-1)
                    if j >= 1 {
                        let dmap = d.differential(j).unwrap();
                        let tbase = offset(k - 1, i);
                        let rd_t = d.modules()[j - 1].rank();
                        for (r, e) in dmap.cols()[b].comps.iter().enumerate() {
                            if !e.is_zero() {
                                let signed = if i % 2 == 0 { e.clone() } else { ar.neg(e) };
                                let t = tbase + a * rd_t + r;
                                cols[col_idx].comps[t] = ar.add(&cols[col_idx].comps[t], &signed);
                            }
                        }
                    }
                }
            }
        }
        diffs.push(ModuleMap::new(src.clone(), tgt.clone(), cols)?);
    }
    ChainComplex::new(modules, diffs)
}

/// A presentation R^s → R^g of a subquotient: columns are the relations of
/// the generators, so M ≅ coker.
pub(crate) fn presentation_of<F: Field>(m: &Subquotient<F>) -> ModuleMap<F> {
    let ring = m.ring().clone();
    let fm = m.ambient();
    let ar = ring.ambient();
    let g = m.gens().len();
    let twists: Vec<i64> = m
        .gens()
        .iter()
        .map(|v| fm.vect_degree(v).unwrap_or(0))
        .collect();
    let free_g = FreeModule::new(ring.clone(), twists);
    // kernel of R^g → ambient/denominator
    let mut cols: Vec<Vect<F>> = m.gens().to_vec();
    cols.extend(m.rels().iter().cloned());
    cols.extend(fm.ring_relation_vects());
    let syz = gb::syzygies_of(ar, fm.twists(), &cols);
    let mut pres: Vec<Vect<F>> = Vec::new();
    for s in syz {
        let v = Vect {
            comps: s.comps[..g].iter().map(|p| ring.reduce(p)).collect(),
        };
        if !v.is_zero() && !pres.contains(&v) {
            pres.push(v);
        }
    }
    let twists: Vec<i64> = pres
        .iter()
        .map(|v| free_g.vect_degree(v).unwrap_or(0))
        .collect();
    let free_s = FreeModule::new(ring, twists);
    ModuleMap::new(free_s, free_g, pres).expect("presentation construction")
}

/// Homology of C ⊗ M for a subquotient M, one subquotient per index 0..=n,
/// computed as ker(∂_i ⊗ id)/im(∂_{i+1} ⊗ id) on a presentation of M.
pub fn tensor_with_module<F: Field>(
    c: &ChainComplex<F>,
    m: &Subquotient<F>,
) -> Result<Vec<Subquotient<F>>> {
    if !c.ring().same(m.ring()) {
        return Err(Error::ring_mismatch("tensor across different rings"));
    }
    (0..=c.length())
        .map(|i| tensor_homology(c, m, i))
        .collect()
}

/// H_i(C ⊗ M) alone.
pub fn tensor_homology<F: Field>(
    c: &ChainComplex<F>,
    m: &Subquotient<F>,
    i: usize,
) -> Result<Subquotient<F>> {
    if !c.ring().same(m.ring()) {
        return Err(Error::ring_mismatch("tensor across different rings"));
    }
    if i > c.length() {
        return Ok(Subquotient::zero(c.ring().clone()));
    }
    let ring = c.ring().clone();
    let ar = ring.ambient();
    let pres = presentation_of(m);
    let g = pres.target().rank();
    let gtw = pres.target().twists().to_vec();

    // A_l = G_l ⊗ R^g with pair index (a, b) -> a*g + b
    let level = |l: usize| -> FreeModule<F> {
        let mut twists = Vec::new();
        for ta in c.modules()[l].twists() {
            for tb in &gtw {
                twists.push(ta + tb);
            }
        }
        FreeModule::new(ring.clone(), twists)
    };
    // columns of ∂_l ⊗ id_g
    let diff_tensor = |l: usize| -> Vec<Vect<F>> {
        let d = c.differential(l).unwrap();
        let tgt_rank = c.modules()[l - 1].rank() * g;
        let mut cols = Vec::new();
        for a in 0..c.modules()[l].rank() {
            for b in 0..g {
                let mut col = Vect::zero(tgt_rank);
                for (r, e) in d.cols()[a].comps.iter().enumerate() {
                    if !e.is_zero() {
                        col.comps[r * g + b] = e.clone();
                    }
                }
                cols.push(col);
            }
        }
        cols
    };
    // id_{G_l} ⊗ presentation columns: the relations of M in level l
    let rel_block = |l: usize| -> Vec<Vect<F>> {
        let rank_l = c.modules()[l].rank();
        let mut out = Vec::new();
        for a in 0..rank_l {
            for pcol in pres.cols() {
                let mut v = Vect::zero(rank_l * g);
                for (b, e) in pcol.comps.iter().enumerate() {
                    v.comps[a * g + b] = e.clone();
                }
                out.push(v);
            }
        }
        out
    };

    let a_i = level(i);
    // numerator: kernel of A_i -> A_{i-1} / (rel block + Q·F)
    let num: Vec<Vect<F>> = if i == 0 {
        (0..a_i.rank()).map(|k| a_i.basis_vect(k)).collect()
    } else {
        let a_prev = level(i - 1);
        let dcols = diff_tensor(i);
        let ncols = dcols.len();
        let mut all = dcols;
        all.extend(rel_block(i - 1));
        all.extend(a_prev.ring_relation_vects());
        let syz = gb::syzygies_of(ar, a_prev.twists(), &all);
        let mut out: Vec<Vect<F>> = Vec::new();
        for s in syz {
            let v = Vect {
                comps: s.comps[..ncols].iter().map(|p| ring.reduce(p)).collect(),
            };
            if !v.is_zero() && !out.contains(&v) {
                out.push(v);
            }
        }
        out
    };
    let mut rels = rel_block(i);
    if i < c.length() {
        rels.extend(diff_tensor(i + 1));
    }
    Ok(Subquotient::new_unchecked(a_i, num, rels))
}

/// Determinantal data of one differential.
#[derive(Clone, Debug)]
pub struct RankData<F: Field> {
    /// homological index i of ∂_i
    pub index: usize,
    /// rank = max { r | I_r(∂_i) ≠ 0 }
    pub rank: usize,
    /// I(∂_i) = I_rank(∂_i); the unit ideal when rank = 0
    pub minor_ideal: Ideal<F>,
    /// grade of I(∂_i); None encodes the unit ideal (grade ∞)
    pub grade: Option<usize>,
}

/// Rank and grade data for every differential plus the standard rank
/// conditions.
#[derive(Clone, Debug)]
pub struct RankProfile<F: Field> {
    pub entries: Vec<RankData<F>>,
    /// rank G_i = rank ∂_i + rank ∂_{i+1} for i = 1..n
    pub standard_conditions: bool,
    /// indices where the rank condition fails
    pub rank_failures: Vec<usize>,
}

/// Largest minor size allowed before giving up (desk-scale guard).
pub const MINOR_CAP: usize = 8;

/// Determinant by Laplace expansion along the first row, entries in the
/// ambient ring.
fn determinant<F: Field>(
    ring: &RingRef<F>,
    entry: &dyn Fn(usize, usize) -> Poly<F>,
    rows: &[usize],
    cols: &[usize],
) -> Poly<F> {
    let ar = ring.ambient();
    if rows.len() == 1 {
        return entry(rows[0], cols[0]);
    }
    let mut acc = ar.zero_poly();
    let sub_rows = &rows[1..];
    for (k, &c) in cols.iter().enumerate() {
        let e = entry(rows[0], c);
        if e.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter_map(|(j, &cc)| (j != k).then_some(cc))
            .collect();
        let minor = determinant(ring, entry, sub_rows, &sub_cols);
        let term = ar.mul(&e, &minor);
        acc = if k % 2 == 0 {
            ar.add(&acc, &term)
        } else {
            ar.sub(&acc, &term)
        };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
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

/// All r×r minors of the map, in normal form; stops early when asked only
/// whether some minor is nonzero.
fn minors<F: Field>(
    phi: &ModuleMap<F>,
    r: usize,
    stop_at_first_nonzero: bool,
) -> Result<Vec<Poly<F>>> {
    if r > MINOR_CAP {
        return Err(Error::SearchFailed(format!(
            "minor size {r} exceeds the cap {MINOR_CAP}"
        )));
    }
    let ring = phi.ring().clone();
    let nrows = phi.target().rank();
    let ncols = phi.source().rank();
    let entry = |row: usize, col: usize| phi.entry(row, col).clone();
    let mut out = Vec::new();
    for rows in subsets(nrows, r) {
        for cols in subsets(ncols, r) {
            let d = determinant(&ring, &entry, &rows, &cols);
            let d = ring.reduce(&d);
            if !d.is_zero() {
                out.push(d);
                if stop_at_first_nonzero {
                    return Ok(out);
                }
            }
        }
    }
    Ok(out)
}

/// rank ∂ = max { r | some r×r minor is nonzero in R }.
pub fn map_rank<F: Field>(phi: &ModuleMap<F>) -> Result<usize> {
    let max_r = phi.target().rank().min(phi.source().rank());
    let mut rank = 0;
    for r in 1..=max_r {
        if minors(phi, r, true)?.is_empty() {
            break;
        }
        rank = r;
    }
    Ok(rank)
}

/// The determinantal ideal I_rank(∂); the unit ideal for rank 0.
pub fn minor_ideal<F: Field>(phi: &ModuleMap<F>) -> Result<(usize, Ideal<F>)> {
    let ring = phi.ring().clone();
    let rank = map_rank(phi)?;
    if rank == 0 {
        let one = ring.ambient().one_poly();
        return Ok((0, Ideal::new(ring, vec![one])));
    }
    let gens = minors(phi, rank, false)?;
    Ok((rank, Ideal::new(ring, gens)))
}

/// Exact grade of a proper nonzero ideal.
///
/// For few generators this is the Koszul characterization
/// n − max{ i ≥ 1 | H_i(f_1,…,f_n; R) ≠ 0 } (grade = n when all positive
/// homology vanishes); for many generators it switches to the equivalent
/// Ext characterization min{ i | Ext^i(R/I, R) ≠ 0 }, which stays small.
pub fn grade<F: Field>(ideal: &Ideal<F>) -> Result<usize> {
    if ideal.gens().is_empty() {
        return Err(Error::precondition("grade of the zero ideal"));
    }
    if ideal.is_unit_ideal() {
        return Err(Error::precondition("grade of the unit ideal"));
    }
    let n = ideal.gens().len();
    if n <= 6 {
        let c = koszul_complex(ideal.gens(), ideal.ring())?;
        for i in (1..=n).rev() {
            if !c.homology_is_zero(i) {
                return Ok(n - i);
            }
        }
        Ok(n)
    } else {
        grade_by_ext(ideal)
    }
}

fn grade_by_ext<F: Field>(ideal: &Ideal<F>) -> Result<usize> {
    let ring = ideal.ring().clone();
    let d = ring.dimension();
    let res = crate::resolution::free_resolution(&Subquotient::cyclic(ideal), d + 1)?;
    for i in 0..=d {
        if !crate::resolution::ext_is_zero(&res, i)? {
            return Ok(i);
        }
    }
    // grade ≤ dim for a proper ideal; unreachable for valid input
    Ok(d)
}

/// grade(I) ≥ k, computed by the cheapest route (vacuously true for the
/// unit ideal).
pub fn grade_at_least<F: Field>(ideal: &Ideal<F>, k: usize) -> Result<bool> {
    if k == 0 {
        return Ok(true);
    }
    if ideal.is_unit_ideal() {
        return Ok(true);
    }
    if ideal.gens().is_empty() {
        return Ok(false);
    }
    Ok(grade(ideal)? >= k)
}

/// Rank profile: per-differential rank, minor ideal, grade, and the
/// standard conditions on rank.
pub fn rank_profile<F: Field>(c: &ChainComplex<F>) -> Result<RankProfile<F>> {
    let n = c.length();
    let mut ranks = vec![0usize; n + 2];
    let mut entries = Vec::new();
    for i in 1..=n {
        let phi = c.differential(i).unwrap();
        let (rank, ideal) = minor_ideal(phi)?;
        ranks[i] = rank;
        let g = if rank == 0 || ideal.is_unit_ideal() {
            None
        } else {
            Some(grade(&ideal)?)
        };
        entries.push(RankData {
            index: i,
            rank,
            minor_ideal: ideal,
            grade: g,
        });
    }
    let mut rank_failures = Vec::new();
    for i in 1..=n {
        if c.modules()[i].rank() != ranks[i] + ranks[i + 1] {
            rank_failures.push(i);
        }
    }
    Ok(RankProfile {
        entries,
        standard_conditions: rank_failures.is_empty(),
        rank_failures,
    })
}

/// One failing condition of the exactness criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactnessFailure {
    Rank { index: usize, module_rank: usize, expected: usize },
    Grade { index: usize, grade: usize, needed: usize },
}

impl std::fmt::Display for ExactnessFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExactnessFailure::Rank {
                index,
                module_rank,
                expected,
            } => write!(
                f,
                "rank condition fails at i = {index}: rank G_{index} = {module_rank} != rank ∂_{index} + rank ∂_{} = {expected}",
                index + 1
            ),
            ExactnessFailure::Grade { index, grade, needed } => write!(
                f,
                "grade condition fails at i = {index}: grade I(∂_{index}) = {grade} < {needed}"
            ),
        }
    }
}

/// The exactness certificate: true iff the standard rank conditions hold
/// and grade I(∂_i) ≥ i for every i ≥ 1.
#[derive(Clone, Debug)]
pub struct ExactnessCertificate<F: Field> {
    pub exact: bool,
    pub failures: Vec<ExactnessFailure>,
    pub profile: RankProfile<F>,
}

/// The rank-and-grade test for exactness at all positive indices.
pub fn buchsbaum_eisenbud_exact<F: Field>(c: &ChainComplex<F>) -> Result<ExactnessCertificate<F>> {
    let n = c.length();
    let profile = rank_profile(c)?;
    let mut failures = Vec::new();
    let mut ranks = vec![0usize; n + 2];
    for e in &profile.entries {
        ranks[e.index] = e.rank;
    }
    for i in 1..=n {
        let expected = ranks[i] + ranks[i + 1];
        if c.modules()[i].rank() != expected {
            failures.push(ExactnessFailure::Rank {
                index: i,
                module_rank: c.modules()[i].rank(),
                expected,
            });
        }
    }
    for e in &profile.entries {
        if e.rank == 0 {
            continue; // unit minor ideal, grade ∞
        }
        match e.grade {
            None => {}
            Some(g) => {
                if g < e.index {
                    failures.push(ExactnessFailure::Grade {
                        index: e.index,
                        grade: g,
                        needed: e.index,
                    });
                }
            }
        }
    }
    Ok(ExactnessCertificate {
        exact: failures.is_empty(),
        failures,
        profile,
    })
}

/// The finite free complex with H_0 = R/J^n for a regular sequence J,
/// realized as the computed minimal free resolution of R/J^n.
pub fn power_complex<F: Field>(
    j_gens: &[Poly<F>],
    n: u32,
    ring: &RingRef<F>,
) -> Result<ChainComplex<F>> {
    if n == 0 {
        return Err(Error::precondition("power must be positive"));
    }
    let j = Ideal::new(ring.clone(), j_gens.to_vec());
    if j.gens().is_empty() {
        return Err(Error::precondition("empty generating set"));
    }
    let g = grade(&j)?;
    if g != j.gens().len() {
        return Err(Error::precondition(format!(
            "generators are not a regular sequence (grade {g} != {} generators)",
            j.gens().len()
        )));
    }
    let jn = j.power(n);
    let res =
        crate::resolution::free_resolution(&Subquotient::cyclic(&jn), j.gens().len() + 1)?;
    Ok(res.complex().clone())
}

/// Outcome of one perturbation trial.
#[derive(Clone, Debug)]
pub struct PerturbationTrial {
    pub persisted: bool,
    /// rendered matrix of the perturbation, for the report
    pub perturbation: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct PerturbationReport {
    pub q: u32,
    pub trials: Vec<PerturbationTrial>,
    pub persisted_count: usize,
}

impl PerturbationReport {
    pub fn fraction(&self) -> (usize, usize) {
        (self.persisted_count, self.trials.len())
    }
}

/// Perturb an injective map G_1 → G_0 by random graded matrices with
/// entries in m^q and test whether injectivity (the rank + grade
/// conditions) persists.
pub fn two_term_perturbation_test<F: Field>(
    phi: &ModuleMap<F>,
    q: u32,
    trials: usize,
    rng_seed: u64,
) -> Result<PerturbationReport> {
    let base = ChainComplex::from_diffs(vec![phi.clone()])?;
    let cert = buchsbaum_eisenbud_exact(&base)?;
    if !cert.exact {
        return Err(Error::precondition(format!(
            "map is not injective: {}",
            cert.failures
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    let ring = phi.ring().clone();
    let ar = ring.ambient();
    let mut rng = labeled_rng(rng_seed, "perturb-test");
    let mut out = Vec::new();
    let mut persisted_count = 0;
    for _ in 0..trials {
        // graded perturbation: entry (r, c) is forced into degree
        // t_src[c] - t_tgt[r]; only degrees supporting monomials with total
        // degree >= q contribute
        let mut cols = Vec::new();
        let mut rendered = Vec::new();
        for c in 0..phi.source().rank() {
            let mut col = Vect::zero(phi.target().rank());
            for r in 0..phi.target().rank() {
                let d = phi.source().twists()[c] - phi.target().twists()[r];
                if d < 0 {
                    continue;
                }
                let monos: Vec<Monomial> = ar
                    .monomials_of_degree(d)
                    .into_iter()
                    .filter(|m| m.total_degree() >= q)
                    .collect();
                let pert = ar.poly_from_terms(
                    monos
                        .into_iter()
                        .map(|m| (m, ar.field.random(&mut rng)))
                        .collect(),
                );
                col.comps[r] = ar.add(&phi.entry(r, c), &pert);
            }
            rendered.push(ring.fmt_poly(&col.comps[0]));
            cols.push(col);
        }
        let perturbed = ModuleMap::new(phi.source().clone(), phi.target().clone(), cols)?;
        let complex = ChainComplex::from_diffs(vec![perturbed])?;
        let cert = buchsbaum_eisenbud_exact(&complex)?;
        if cert.exact {
            persisted_count += 1;
        }
        out.push(PerturbationTrial {
            persisted: cert.exact,
            perturbation: rendered,
        });
    }
    Ok(PerturbationReport {
        q,
        trials: out,
        persisted_count,
    })
}

/// A finite complex of subquotients: `maps[i]` is the ambient-level map
/// M_{i+1} → M_i.
#[derive(Clone, Debug)]
pub struct ModuleComplex<F: Field> {
    pub modules: Vec<Subquotient<F>>,
    pub maps: Vec<ModuleMap<F>>,
}

impl<F: Field> ModuleComplex<F> {
    pub fn new(modules: Vec<Subquotient<F>>, maps: Vec<ModuleMap<F>>) -> Result<Self> {
        if maps.len() + 1 != modules.len() {
            return Err(Error::precondition("map count != length"));
        }
        for (i, f) in maps.iter().enumerate() {
            let (src, tgt) = (&modules[i + 1], &modules[i]);
            if f.source().rank() != src.ambient().rank()
                || f.target().rank() != tgt.ambient().rank()
            {
                return Err(Error::precondition("map ranks do not match the modules"));
            }
            // generators map into the target numerator, relations into the
            // target denominator
            let num = span_gb(tgt.ambient(), tgt.gens());
            for g in src.gens() {
                if !in_span_gb(tgt.ambient(), &num, &f.apply(g)) {
                    return Err(Error::precondition(format!(
                        "map {} does not send generators into generators",
                        i + 1
                    )));
                }
            }
            let den = span_gb(tgt.ambient(), tgt.rels());
            for r in src.rels() {
                if !in_span_gb(tgt.ambient(), &den, &f.apply(r)) {
                    return Err(Error::precondition(format!(
                        "map {} does not send relations into relations",
                        i + 1
                    )));
                }
            }
        }
        // composition vanishes on the subquotients
        for i in 0..maps.len().saturating_sub(1) {
            let den = span_gb(modules[i].ambient(), modules[i].rels());
            for g in modules[i + 2].gens() {
                let image = maps[i].apply(&maps[i + 1].apply(g));
                if !in_span_gb(modules[i].ambient(), &den, &image) {
                    return Err(Error::precondition(format!(
                        "composite M_{} → M_{} is nonzero",
                        i + 2,
                        i
                    )));
                }
            }
        }
        Ok(ModuleComplex { modules, maps })
    }

    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn ring(&self) -> &RingRef<F> {
        self.modules[0].ring()
    }

    /// H_i of the complex of subquotients.
    pub fn homology(&self, i: usize) -> Subquotient<F> {
        let ring = self.ring().clone();
        if i > self.length() {
            return Subquotient::zero(ring);
        }
        let m_i = &self.modules[i];
        let ar = ring.ambient();
        // kernel part: { Σ a_j g_j | map(Σ a_j g_j) ∈ den(M_{i-1}) }
        let mut gens: Vec<Vect<F>> = if i == 0 {
            m_i.gens().to_vec()
        } else {
            let f = &self.maps[i - 1];
            let tgt = &self.modules[i - 1];
            let images: Vec<Vect<F>> = m_i.gens().iter().map(|g| f.apply(g)).collect();
            let ncols = images.len();
            let mut all = images;
            all.extend(tgt.rels().iter().cloned());
            all.extend(tgt.ambient().ring_relation_vects());
            let syz = gb::syzygies_of(ar, tgt.ambient().twists(), &all);
            let mut out: Vec<Vect<F>> = Vec::new();
            for s in syz {
                let mut v = Vect::zero(m_i.ambient().rank());
                for (j, coeff) in s.comps[..ncols].iter().enumerate() {
                    if !coeff.is_zero() {
                        v = gb::vect_add(ar, &v, &gb::vect_scale_poly(ar, &m_i.gens()[j], coeff));
                    }
                }
                let v = m_i.ambient().reduce_vect_mod_ring(&v);
                if !v.is_zero() && !out.contains(&v) {
                    out.push(v);
                }
            }
            out
        };
        gens.extend(m_i.rels().iter().cloned());
        let mut rels: Vec<Vect<F>> = m_i.rels().to_vec();
        if i < self.length() {
            let f = &self.maps[i];
            rels.extend(self.modules[i + 1].gens().iter().map(|g| f.apply(g)));
        }
        Subquotient::new_unchecked(m_i.ambient().clone(), gens, rels)
    }
}

#[derive(Clone, Debug)]
pub struct FoundationCheck {
    pub hypothesis_failures: Vec<String>,
    /// None when a hypothesis failed; Some(conclusion) otherwise.
    pub conclusion: Option<bool>,
}

/// The annihilation transfer check: given a complex M_• of length n, a
/// sequence x_1..x_n, elements d_0..d_{n-2} killing H_{n-i}(M_•) and d
/// killing H_{n-j}(x; M_{j+1}), the product D = (d_0⋯d_{n-2})·d^n must kill
/// the x-torsion Hom(R/(x), H_1(M_•)), realized as the submodule of H_1
/// annihilated by every x_k. Hypotheses are verified first and reported
/// separately from the conclusion.
pub fn foundation_homology_check<F: Field>(
    mcplx: &ModuleComplex<F>,
    x_seq: &[Poly<F>],
    d_list: &[Poly<F>],
    d_elt: &Poly<F>,
) -> Result<FoundationCheck> {
    let n = mcplx.length();
    if n == 0 {
        return Err(Error::precondition("complex of length 0"));
    }
    if x_seq.len() != n {
        return Err(Error::precondition(format!(
            "sequence length {} != complex length {n}",
            x_seq.len()
        )));
    }
    if n >= 2 && d_list.len() != n - 1 {
        return Err(Error::precondition(format!(
            "expected {} annihilator elements d_0..d_{}, got {}",
            n - 1,
            n - 2,
            d_list.len()
        )));
    }
    let ring = mcplx.ring().clone();
    let ar = ring.ambient();
    let mut failures = Vec::new();

    // hypothesis (1): d_i kills H_{n-i}(M_•) for 0 <= i <= n-2
    for (i, d) in d_list.iter().enumerate() {
        let h = mcplx.homology(n - i);
        if !annihilates(d, &h)? {
            failures.push(format!("d_{i} does not kill H_{}(M_•)", n - i));
        }
    }
    // hypothesis (2): d kills H_{n-j}(x_1..x_n; M_{j+1}) for 1 <= j <= n-1
    if n >= 2 {
        let kc = koszul_complex(x_seq, &ring)?;
        for j in 1..=n - 1 {
            let h = tensor_homology(&kc, &mcplx.modules[j + 1], n - j)?;
            if !annihilates(d_elt, &h)? {
                failures.push(format!("d does not kill H_{}(x; M_{})", n - j, j + 1));
            }
        }
    }
    if !failures.is_empty() {
        return Ok(FoundationCheck {
            hypothesis_failures: failures,
            conclusion: None,
        });
    }

    // D = (d_0 ... d_{n-2}) d^n
    let mut dd = ar.one_poly();
    for d in d_list {
        dd = ar.mul(&dd, d);
    }
    for _ in 0..n {
        dd = ar.mul(&dd, d_elt);
    }

    // (0 :_{H_1} (x)) as a submodule of the ambient of H_1
    let h1 = mcplx.homology(1);
    let fm = h1.ambient().clone();
    let den = span_gb(&fm, h1.rels());
    let mut torsion = Subquotient::submodule(fm.clone(), h1.gens().to_vec());
    for x in x_seq {
        let w = crate::module::submodule_colon_poly(&fm, h1.rels(), x);
        let wmod = Subquotient::submodule(fm.clone(), w);
        torsion = module_intersection(&torsion, &wmod)?;
    }
    let ok = torsion.gens().iter().all(|v| {
        let dv = fm.reduce_vect_mod_ring(&gb::vect_scale_poly(ar, v, &dd));
        in_span_gb(&fm, &den, &dv)
    });
    Ok(FoundationCheck {
        hypothesis_failures: Vec::new(),
        conclusion: Some(ok),
    })
}

/// f annihilates the subquotient: f·(every generator) lies in the
/// denominator span.
pub fn annihilates<F: Field>(f: &Poly<F>, m: &Subquotient<F>) -> Result<bool> {
    let fm = m.ambient();
    let ar = m.ring().ambient();
    let den = m.denominator_gb();
    Ok(m
        .gens()
        .iter()
        .all(|g| in_span_gb(fm, &den, &fm.reduce_vect_mod_ring(&gb::vect_scale_poly(ar, g, f)))))
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
    fn koszul_on_regular_sequence_is_acyclic() {
        let r = k_xy();
        let c = koszul_complex(&[p(&r, "x"), p(&r, "y")], &r).unwrap();
        assert_eq!(c.ranks(), vec![1, 2, 1]);
        assert!(c.homology_is_zero(1));
        assert!(c.homology_is_zero(2));
        // H_0 = R/(x,y): total dimension 1
        let h0 = c.homology(0);
        assert_eq!(h0.hilbert_function(0, 2).unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn koszul_on_non_regular_sequence() {
        let r = k_xy();
        let c = koszul_complex(&[p(&r, "x^2"), p(&r, "x*y")], &r).unwrap();
        let h1 = c.homology(1);
        assert!(!h1.is_zero_module());
        // H_1 ≅ (R/(x))(-3): Hilbert function 0,0,0,1,1,...
        assert_eq!(h1.hilbert_function(0, 5).unwrap(), vec![0, 0, 0, 1, 1, 1]);
        let ann = h1.annihilator().unwrap();
        assert!(ann.equals(&Ideal::parse(&r, &["x"]).unwrap()));
    }

    #[test]
    fn koszul_on_single_nonzerodivisor() {
        let rx = QuotientRing::polynomial_ring(
            PolyRing::new(Rationals, &["x"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let x = parse_poly(rx.ambient(), "x").unwrap();
        let c = koszul_complex(&[x], &rx).unwrap();
        assert_eq!(c.ranks(), vec![1, 1]);
        assert!(c.homology_is_zero(1));
    }

    #[test]
    fn tensor_of_koszuls_matches_koszul() {
        let r = k_xy();
        let cx = koszul_complex(&[p(&r, "x")], &r).unwrap();
        let cy = koszul_complex(&[p(&r, "y")], &r).unwrap();
        let t = tensor_complexes(&cx, &cy).unwrap();
        assert_eq!(t.ranks(), vec![1, 2, 1]);
        assert!(t.homology_is_zero(1));
        assert!(t.homology_is_zero(2));

        // unit complex
        let unit = ChainComplex::single(FreeModule::standard(r.clone(), 1));
        let same = tensor_complexes(&cx, &unit).unwrap();
        assert_eq!(same.ranks(), cx.ranks());

        // Koszul(x,y) ⊗ Koszul(z) over k[x,y,z]
        let r3 = QuotientRing::polynomial_ring(
            PolyRing::new(Rationals, &["x", "y", "z"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let (x, y, z) = (
            parse_poly(r3.ambient(), "x").unwrap(),
            parse_poly(r3.ambient(), "y").unwrap(),
            parse_poly(r3.ambient(), "z").unwrap(),
        );
        let cxy = koszul_complex(&[x, y], &r3).unwrap();
        let cz = koszul_complex(&[z], &r3).unwrap();
        let t = tensor_complexes(&cxy, &cz).unwrap();
        assert_eq!(t.ranks(), vec![1, 3, 3, 1]);
        assert!(t.is_acyclic());
    }

    #[test]
    fn tensor_with_module_examples() {
        let r = k_xy();
        // Koszul(x,y) ⊗ R: H_1 = 0
        let c = koszul_complex(&[p(&r, "x"), p(&r, "y")], &r).unwrap();
        let free = Subquotient::free(FreeModule::standard(r.clone(), 1));
        let hs = tensor_with_module(&c, &free).unwrap();
        assert!(hs[1].is_zero_module());
        assert!(hs[2].is_zero_module());

        // Koszul(x) ⊗ R/(x) over k[x]: H_1 = Tor_1(R/x, R/x) ≅ R/(x)
        let rx = QuotientRing::polynomial_ring(
            PolyRing::new(Rationals, &["x"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let x = parse_poly(rx.ambient(), "x").unwrap();
        let cx = koszul_complex(&[x.clone()], &rx).unwrap();
        let modx = Subquotient::cyclic(&Ideal::new(rx.clone(), vec![x]));
        let hs = tensor_with_module(&cx, &modx).unwrap();
        assert!(!hs[1].is_zero_module());
        assert_eq!(hs[1].total_dimension(0, 3).unwrap(), 1);

        // Koszul(x^2, xy) ⊗ R^1: H_1 with annihilator (x)
        let c = koszul_complex(&[p(&r, "x^2"), p(&r, "x*y")], &r).unwrap();
        let free = Subquotient::free(FreeModule::standard(r.clone(), 1));
        let hs = tensor_with_module(&c, &free).unwrap();
        let ann = hs[1].annihilator().unwrap();
        assert!(ann.equals(&Ideal::parse(&r, &["x"]).unwrap()));
    }

    #[test]
    fn rank_profile_of_koszul() {
        let r = k_xy();
        let c = koszul_complex(&[p(&r, "x"), p(&r, "y")], &r).unwrap();
        let prof = rank_profile(&c).unwrap();
        assert!(prof.standard_conditions);
        assert_eq!(prof.entries[0].rank, 1);
        assert_eq!(prof.entries[1].rank, 1);
        assert_eq!(prof.entries[0].grade, Some(2)); // I(∂_1) = (x, y)
    }

    #[test]
    fn rank_of_degenerate_matrix() {
        let r = k_xy();
        // one-map complex [x y; 0 0]: rank 1, I(∂) = (x, y)
        let src = FreeModule::new(r.clone(), vec![1, 1]);
        let tgt = FreeModule::standard(r.clone(), 2);
        let phi = ModuleMap::from_rows(
            src,
            tgt,
            &[
                vec![p(&r, "x"), p(&r, "y")],
                vec![p(&r, "0 + x - x"), p(&r, "x - x")],
            ],
        )
        .unwrap();
        let (rank, ideal) = minor_ideal(&phi).unwrap();
        assert_eq!(rank, 1);
        assert!(ideal.equals(&Ideal::parse(&r, &["x", "y"]).unwrap()));
    }

    #[test]
    fn grade_examples() {
        let r = k_xy();
        assert_eq!(grade(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap(), 2);
        assert_eq!(grade(&Ideal::parse(&r, &["x^2", "x*y"]).unwrap()).unwrap(), 1);
        // (y) in k[x,y]/(xy): y is a zerodivisor, grade 0
        let ar = std::sync::Arc::new(
            PolyRing::new(Rationals, &["x", "y"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let xy = parse_poly(&ar, "x*y").unwrap();
        let q = QuotientRing::make(ar, &[xy]).unwrap();
        assert_eq!(grade(&Ideal::parse(&q, &["y"]).unwrap()).unwrap(), 0);
        // errors
        assert!(grade(&Ideal::zero(r.clone())).is_err());
        assert!(grade(&Ideal::parse(&r, &["1"]).unwrap()).is_err());
    }

    #[test]
    fn exactness_criterion_examples() {
        let r = k_xy();
        let c = koszul_complex(&[p(&r, "x"), p(&r, "y")], &r).unwrap();
        assert!(buchsbaum_eisenbud_exact(&c).unwrap().exact);

        let c = koszul_complex(&[p(&r, "x^2"), p(&r, "x*y")], &r).unwrap();
        let cert = buchsbaum_eisenbud_exact(&c).unwrap();
        assert!(!cert.exact);
        assert!(cert
            .failures
            .iter()
            .any(|f| matches!(f, ExactnessFailure::Grade { index: 2, .. })));

        // 0 → R --0--> R: rank condition fails at i = 1
        let fm = FreeModule::standard(r.clone(), 1);
        let zero_map = ModuleMap::zero(fm.clone(), fm.clone());
        let c = ChainComplex::from_diffs(vec![zero_map]).unwrap();
        let cert = buchsbaum_eisenbud_exact(&c).unwrap();
        assert!(!cert.exact);
        assert!(matches!(
            cert.failures[0],
            ExactnessFailure::Rank { index: 1, .. }
        ));
    }

    #[test]
    fn criterion_agrees_with_homology_on_koszul_fixtures() {
        let r = k_xy();
        for gens in [
            vec!["x", "y"],
            vec!["x^2", "y^3"],
            vec!["x + y", "x - y"],
            vec!["x^2", "x*y"],
            vec!["x", "x*y"],
        ] {
            let polys: Vec<_> = gens.iter().map(|s| p(&r, s)).collect();
            let c = koszul_complex(&polys, &r).unwrap();
            let cert = buchsbaum_eisenbud_exact(&c).unwrap();
            assert_eq!(cert.exact, c.is_acyclic(), "fixture {gens:?}");
        }
    }

    #[test]
    fn power_complex_examples() {
        let r = k_xy();
        // J = (x,y), n = 2: length 2, H_0 = R/(x,y)^2
        let c = power_complex(&[p(&r, "x"), p(&r, "y")], 2, &r).unwrap();
        assert_eq!(c.length(), 2);
        let h0 = c.homology(0);
        assert_eq!(h0.hilbert_function(0, 2).unwrap(), vec![1, 2, 0]);
        assert!(c.is_acyclic());
        // 2x2 minors of the presentation differential generate J^2
        let (rank, ideal) = minor_ideal(c.differential(2).unwrap()).unwrap();
        assert_eq!(rank, 2);
        let j2 = Ideal::parse(&r, &["x", "y"]).unwrap().power(2);
        assert!(ideal.equals(&j2));

        // principal: J = (x), n = 3
        let c = power_complex(&[p(&r, "x")], 3, &r).unwrap();
        assert_eq!(c.ranks(), vec![1, 1]);
        assert_eq!(
            c.differential(1).unwrap().entry(0, 0),
            &p(&r, "x^3")
        );

        // n = 1 is the Koszul shape
        let c = power_complex(&[p(&r, "x"), p(&r, "y")], 1, &r).unwrap();
        assert_eq!(c.ranks(), vec![1, 2, 1]);

        // non-regular sequences are rejected
        assert!(power_complex(&[p(&r, "x^2"), p(&r, "x*y")], 2, &r).is_err());
    }

    #[test]
    fn perturbation_trivial_and_failing() {
        let rx = QuotientRing::polynomial_ring(
            PolyRing::new(Rationals, &["x"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let x2 = parse_poly(rx.ambient(), "x^2").unwrap();
        let src = FreeModule::new(rx.clone(), vec![2]);
        let tgt = FreeModule::standard(rx.clone(), 1);
        let phi = ModuleMap::new(src, tgt, vec![Vect::from_poly(x2)]).unwrap();
        // q = 3 forbids any graded perturbation of a degree-2 entry
        let rep = two_term_perturbation_test(&phi, 3, 5, 7).unwrap();
        assert_eq!(rep.persisted_count, 5);

        // q = 0 with phi = (x) over F_3: a perturbation by -x (coefficient 2,
        // probability 1/3 per trial) gives the zero map, so injectivity must
        // fail at least once in 50 trials
        let f3 = crate::field::PrimeField::new(3).unwrap();
        let r3 = QuotientRing::polynomial_ring(
            PolyRing::new(f3, &["x"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let x = parse_poly(r3.ambient(), "x").unwrap();
        let src = FreeModule::new(r3.clone(), vec![1]);
        let tgt = FreeModule::standard(r3.clone(), 1);
        let phi = ModuleMap::new(src, tgt, vec![Vect::from_poly(x)]).unwrap();
        let rep = two_term_perturbation_test(&phi, 0, 50, 11).unwrap();
        assert!(rep.persisted_count < 50, "expected at least one failure");
        assert!(rep.persisted_count > 0, "expected at least one persistence");
    }

    #[test]
    fn foundation_check_on_acyclic_koszul() {
        let r = k_xy();
        // Koszul(x,y) viewed as a module complex: H_1 = 0, conclusion holds
        let kc = koszul_complex(&[p(&r, "x"), p(&r, "y")], &r).unwrap();
        let modules: Vec<Subquotient<Rationals>> = (0..=kc.length())
            .map(|i| Subquotient::free(kc.modules()[i].clone()))
            .collect();
        let maps: Vec<_> = (1..=kc.length())
            .map(|i| kc.differential(i).unwrap().clone())
            .collect();
        let mc = ModuleComplex::new(modules, maps).unwrap();
        let rep = foundation_homology_check(
            &mc,
            &[p(&r, "x"), p(&r, "y")],
            &[p(&r, "1")],
            &p(&r, "1"),
        )
        .unwrap();
        assert!(rep.hypothesis_failures.is_empty());
        assert_eq!(rep.conclusion, Some(true));
    }

    #[test]
    fn foundation_check_two_term() {
        // R = k[x]/(x^2), complex 0 → R --x--> R, n = 1: H_1 = (x); pick
        // d = x: conclusion x·(0 : x) = x·(x) = 0 holds
        let ar = std::sync::Arc::new(
            PolyRing::new(Rationals, &["x"], MonomialOrder::GrevLex, None).unwrap(),
        );
        let x2 = parse_poly(&ar, "x^2").unwrap();
        let rr = QuotientRing::make(ar.clone(), &[x2]).unwrap();
        let x = parse_poly(&ar, "x").unwrap();
        let m1 = FreeModule::new(rr.clone(), vec![1]);
        let m0 = FreeModule::standard(rr.clone(), 1);
        let phi = ModuleMap::new(m1.clone(), m0.clone(), vec![Vect::from_poly(x.clone())]).unwrap();
        let mc = ModuleComplex::new(
            vec![Subquotient::free(m0), Subquotient::free(m1)],
            vec![phi],
        )
        .unwrap();
        let rep = foundation_homology_check(&mc, &[x.clone()], &[], &x).unwrap();
        assert!(rep.hypothesis_failures.is_empty());
        assert_eq!(rep.conclusion, Some(true));

        // d = 1 must fail the conclusion: 1·(0 : x) = (x) ≠ 0
        let one = parse_poly(&ar, "1").unwrap();
        let m1 = FreeModule::new(rr.clone(), vec![1]);
        let m0 = FreeModule::standard(rr.clone(), 1);
        let phi = ModuleMap::new(m1.clone(), m0.clone(), vec![Vect::from_poly(x.clone())]).unwrap();
        let mc = ModuleComplex::new(
            vec![Subquotient::free(m0), Subquotient::free(m1)],
            vec![phi],
        )
        .unwrap();
        let rep = foundation_homology_check(&mc, &[x], &[], &one).unwrap();
        assert_eq!(rep.conclusion, Some(false));
    }
}
