//! Buchberger engine for submodules of free modules, with optional syzygy
//! tracking.
//!
//! Everything runs over the ambient polynomial ring; quotient-ring callers
//! adjoin multiples of the defining basis to their generating sets. Vectors
//! use the position-over-term order (earlier component wins) on top of the
//! ring's monomial order. Pair selection is by ascending (degree, i, j),
//! which is the degree-by-degree strategy on homogeneous input; the two
//! classical pair criteria are applied only when syzygies are not being
//! tracked, so tracked runs reduce every pair and emit one syzygy per zero
//! reduction (which then generate the full syzygy module of the input).

use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::PolyRing;
use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

/// A vector in a free module R^rank; component i is a polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vect<F: Field> {
    pub comps: Vec<Poly<F>>,
}

impl<F: Field> Vect<F> {
    pub fn zero(rank: usize) -> Self {
        Vect {
            comps: (0..rank).map(|_| Poly::zero()).collect(),
        }
    }

    pub fn unit(rank: usize, comp: usize, p: Poly<F>) -> Self {
        let mut v = Vect::zero(rank);
        v.comps[comp] = p;
        v
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        Vect { comps: vec![p] }
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|p| p.is_zero())
    }

    /// Leading (component, monomial, coefficient) under position-over-term:
    /// the first nonzero component's leading term.
    pub fn lead(&self) -> Option<(usize, &Monomial, &F::Elem)> {
        self.comps
            .iter()
            .enumerate()
            .find(|(_, p)| !p.is_zero())
            .map(|(c, p)| {
                let (m, k) = p.lead().unwrap();
                (c, m, k)
            })
    }
}

pub fn vect_add<F: Field>(ring: &PolyRing<F>, a: &Vect<F>, b: &Vect<F>) -> Vect<F> {
    Vect {
        comps: a
            .comps
            .iter()
            .zip(&b.comps)
            .map(|(x, y)| ring.add(x, y))
            .collect(),
    }
}

pub fn vect_sub<F: Field>(ring: &PolyRing<F>, a: &Vect<F>, b: &Vect<F>) -> Vect<F> {
    Vect {
        comps: a
            .comps
            .iter()
            .zip(&b.comps)
            .map(|(x, y)| ring.sub(x, y))
            .collect(),
    }
}

/// a - (c * m) * b
fn vect_sub_scaled<F: Field>(
    ring: &PolyRing<F>,
    a: &Vect<F>,
    m: &Monomial,
    c: &F::Elem,
    b: &Vect<F>,
) -> Vect<F> {
    Vect {
        comps: a
            .comps
            .iter()
            .zip(&b.comps)
            .map(|(x, y)| ring.sub(x, &ring.mul_term(y, m, c)))
            .collect(),
    }
}

pub fn vect_mul_term<F: Field>(
    ring: &PolyRing<F>,
    a: &Vect<F>,
    m: &Monomial,
    c: &F::Elem,
) -> Vect<F> {
    Vect {
        comps: a.comps.iter().map(|x| ring.mul_term(x, m, c)).collect(),
    }
}

pub fn vect_scale_poly<F: Field>(ring: &PolyRing<F>, a: &Vect<F>, p: &Poly<F>) -> Vect<F> {
    Vect {
        comps: a.comps.iter().map(|x| ring.mul(x, p)).collect(),
    }
}

fn monic<F: Field>(ring: &PolyRing<F>, v: &Vect<F>) -> (Vect<F>, F::Elem) {
    let (_, _, c) = v.lead().expect("monic of zero vector");
    let inv = ring.field.inv(c);
    (
        Vect {
            comps: v
                .comps
                .iter()
                .map(|p| ring.scale(p, &inv))
                .collect(),
        },
        inv,
    )
}

/// Full normal form of `v` against `basis` (scanned in order). Every term of
/// the result is divisible by no basis lead.
pub fn reduce_vect<F: Field>(ring: &PolyRing<F>, basis: &[Vect<F>], v: &Vect<F>) -> Vect<F> {
    reduce_vect_tracked(ring, basis, v, None)
}

/// As `reduce_vect`; when `trace` is given, records the quotient against each
/// basis element so that v = nf + Σ trace[i]*basis[i].
fn reduce_vect_tracked<F: Field>(
    ring: &PolyRing<F>,
    basis: &[Vect<F>],
    v: &Vect<F>,
    mut trace: Option<&mut Vec<Poly<F>>>,
) -> Vect<F> {
    let rank = v.rank();
    let mut work = v.clone();
    let mut nf: Vec<Vec<(Monomial, F::Elem)>> = vec![Vec::new(); rank];
    'outer: loop {
        let Some((c, m, k)) = work.lead().map(|(c, m, k)| (c, m.clone(), k.clone())) else {
            break;
        };
        for (bi, b) in basis.iter().enumerate() {
            if let Some((bc, bm, bk)) = b.lead() {
                if bc == c {
                    if let Some(q) = bm.div_into(&m) {
                        let coef = ring.field.div(&k, bk);
                        work = vect_sub_scaled(ring, &work, &q, &coef, b);
                        if let Some(tr) = trace.as_deref_mut() {
                            tr[bi] = ring.add(&tr[bi], &ring.term_poly(&q, &coef));
                        }
                        continue 'outer;
                    }
                }
            }
        }
        // irreducible lead: move it to the normal form
        let popped = work.comps[c].pop_lead().unwrap();
        nf[c].push(popped);
    }
    Vect {
        comps: nf.into_iter().map(Poly::from_sorted).collect(),
    }
}

/// Options and result of a module Groebner run.
pub struct GbRun<F: Field> {
    /// Monic Groebner basis. In tracking mode the first `gens.len()` entries
    /// are the (scaled) input generators in order.
    pub basis: Vec<Vect<F>>,
    /// For tracking runs: basis[i] = Σ_j reprs[i][j] · gens[j].
    pub reprs: Option<Vec<Vect<F>>>,
    /// For tracking runs: generators of the syzygy module of `gens`,
    /// coordinates indexed like `gens`.
    pub syzygies: Vec<Vect<F>>,
}

struct Pair {
    deg: i64,
    i: usize,
    j: usize,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        (self.deg, self.i, self.j) == (other.deg, other.i, other.j)
    }
}
impl Eq for Pair {}
impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.deg, self.i, self.j).cmp(&(other.deg, other.i, other.j))
    }
}

/// Buchberger. `twists` gives the degree shift of each free-module component
/// (used only to order pairs; pass zeros when ungraded). When `track` is set,
/// syzygies of the input generators are collected and no pair criteria are
/// used; otherwise the coprime-lead and chain criteria prune pairs.
pub fn module_gb<F: Field>(
    ring: &PolyRing<F>,
    twists: &[i64],
    gens: &[Vect<F>],
    track: bool,
) -> GbRun<F> {
    let ngens = gens.len();
    let mut basis: Vec<Vect<F>> = Vec::new();
    let mut reprs: Vec<Vect<F>> = Vec::new();
    let mut syzygies: Vec<Vect<F>> = Vec::new();
    let mut heap: BinaryHeap<Reverse<Pair>> = BinaryHeap::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();

    let pair_deg = |a: &Vect<F>, b: &Vect<F>| -> i64 {
        let (ca, ma, _) = a.lead().unwrap();
        let (_, mb, _) = b.lead().unwrap();
        ma.lcm(mb).weighted_degree(ring.weights()) + twists.get(ca).copied().unwrap_or(0)
    };

    let push_pairs = |basis: &mut Vec<Vect<F>>,
                          reprs: &mut Vec<Vect<F>>,
                          heap: &mut BinaryHeap<Reverse<Pair>>,
                          v: Vect<F>,
                          repr: Option<Vect<F>>| {
        let (mv, scale) = monic(ring, &v);
        let idx = basis.len();
        if track {
            let r = repr.unwrap_or_else(|| {
                Vect::unit(ngens, idx, ring.constant(ring.field.one()))
            });
            reprs.push(Vect {
                comps: r.comps.iter().map(|p| ring.scale(p, &scale)).collect(),
            });
        }
        let (cv, _, _) = mv.lead().unwrap();
        for (k, b) in basis.iter().enumerate() {
            let (cb, _, _) = b.lead().unwrap();
            if cb == cv {
                heap.push(Reverse(Pair {
                    deg: pair_deg(&mv, b),
                    i: k,
                    j: idx,
                }));
            }
        }
        basis.push(mv);
    };

    for (gi, g) in gens.iter().enumerate() {
        if g.is_zero() {
            if track {
                syzygies.push(Vect::unit(ngens, gi, ring.one_poly()));
            }
            continue;
        }
        let repr = track.then(|| Vect::unit(ngens, gi, ring.one_poly()));
        push_pairs(&mut basis, &mut reprs, &mut heap, g.clone(), repr);
    }

    while let Some(Reverse(Pair { i, j, .. })) = heap.pop() {
        let (ci, mi, _) = basis[i].lead().map(|(c, m, k)| (c, m.clone(), k.clone())).unwrap();
        let (_, mj, _) = basis[j].lead().map(|(c, m, k)| (c, m.clone(), k.clone())).unwrap();
        let lcm = mi.lcm(&mj);
        done.insert((i, j));

        if !track {
            if mi.coprime(&mj) {
                continue;
            }
            // chain criterion: some k with lead dividing the lcm whose pairs
            // with both i and j were already considered
            let chained = basis.iter().enumerate().any(|(k, b)| {
                if k == i || k == j {
                    return false;
                }
                match b.lead() {
                    Some((ck, mk, _)) if ck == ci && mk.divides(&lcm) => {
                        let a = (i.min(k), i.max(k));
                        let b2 = (j.min(k), j.max(k));
                        done.contains(&a) && done.contains(&b2)
                    }
                    _ => false,
                }
            });
            if chained {
                continue;
            }
        }

        let ui = mi.div_into(&lcm).unwrap();
        let uj = mj.div_into(&lcm).unwrap();
        let one = ring.field.one();
        let s = vect_sub(
            ring,
            &vect_mul_term(ring, &basis[i], &ui, &one),
            &vect_mul_term(ring, &basis[j], &uj, &one),
        );

        let mut trace = track.then(|| vec![Poly::<F>::zero(); basis.len()]);
        let nf = reduce_vect_tracked(ring, &basis, &s, trace.as_mut());

        if nf.is_zero() {
            if track {
                // m_i e_i - m_j e_j - Σ q_k e_k, pushed down to input coords
                let tr = trace.unwrap();
                let mut syz = Vect::zero(ngens);
                syz = vect_add(ring, &syz, &vect_mul_term(ring, &reprs[i], &ui, &one));
                syz = vect_sub(ring, &syz, &vect_mul_term(ring, &reprs[j], &uj, &one));
                for (k, q) in tr.iter().enumerate() {
                    if !q.is_zero() {
                        let contrib = Vect {
                            comps: reprs[k].comps.iter().map(|p| ring.mul(p, q)).collect(),
                        };
                        syz = vect_sub(ring, &syz, &contrib);
                    }
                }
                if !syz.is_zero() {
                    syzygies.push(syz);
                }
            }
        } else {
            let repr = track.then(|| {
                let tr = trace.unwrap();
                let mut r = Vect::zero(ngens);
                r = vect_add(ring, &r, &vect_mul_term(ring, &reprs[i], &ui, &one));
                r = vect_sub(ring, &r, &vect_mul_term(ring, &reprs[j], &uj, &one));
                for (k, q) in tr.iter().enumerate() {
                    if !q.is_zero() {
                        let contrib = Vect {
                            comps: reprs[k].comps.iter().map(|p| ring.mul(p, q)).collect(),
                        };
                        r = vect_sub(ring, &r, &contrib);
                    }
                }
                r
            });
            push_pairs(&mut basis, &mut reprs, &mut heap, nf, repr);
        }
    }

    GbRun {
        basis,
        reprs: track.then_some(reprs),
        syzygies,
    }
}

/// Reduced (canonical) Groebner basis of the module generated by `gens`:
/// minimal leads, fully tail-reduced, monic, sorted descending by lead.
pub fn reduced_module_gb<F: Field>(
    ring: &PolyRing<F>,
    twists: &[i64],
    gens: &[Vect<F>],
) -> Vec<Vect<F>> {
    let run = module_gb(ring, twists, gens, false);
    let mut basis = run.basis;

    // minimalize: drop any element whose lead is divisible by another's
    let leads: Vec<(usize, Monomial)> = basis
        .iter()
        .map(|v| {
            let (c, m, _) = v.lead().unwrap();
            (c, m.clone())
        })
        .collect();
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..basis.len() {
            if a == b || !keep[b] {
                continue;
            }
            if leads[b].0 == leads[a].0 && leads[b].1.divides(&leads[a].1) {
                // equal leads: keep the earlier one
                if leads[b].1 == leads[a].1 && b > a {
                    continue;
                }
                keep[a] = false;
                break;
            }
        }
    }
    let minimal: Vec<Vect<F>> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(v, k)| k.then_some(v))
        .collect();

    // tail-reduce each against the rest
    let mut reduced: Vec<Vect<F>> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Vect<F>> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, v)| (j != i).then(|| v.clone()))
            .collect();
        let nf = reduce_vect(ring, &others, &minimal[i]);
        debug_assert!(!nf.is_zero());
        reduced.push(monic(ring, &nf).0);
    }

    reduced.sort_by(|a, b| {
        let (ca, ma, _) = a.lead().unwrap();
        let (cb, mb, _) = b.lead().unwrap();
        let da = ma.weighted_degree(ring.weights()) + twists.get(ca).copied().unwrap_or(0);
        let db = mb.weighted_degree(ring.weights()) + twists.get(cb).copied().unwrap_or(0);
        // ascending lead degree, then position, then descending lead
        da.cmp(&db)
            .then(ca.cmp(&cb))
            .then_with(|| ring.cmp_mono(mb, ma))
    });
    reduced
}

/// Reduced Groebner basis of an ideal (rank-1 case).
pub fn reduced_ideal_gb<F: Field>(ring: &PolyRing<F>, gens: &[Poly<F>]) -> Vec<Poly<F>> {
    let vgens: Vec<Vect<F>> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Vect::from_poly(p.clone()))
        .collect();
    reduced_module_gb(ring, &[0], &vgens)
        .into_iter()
        .map(|v| v.comps.into_iter().next().unwrap())
        .collect()
}

/// Normal form of a polynomial against a rank-1 basis.
pub fn reduce_poly<F: Field>(ring: &PolyRing<F>, basis: &[Poly<F>], f: &Poly<F>) -> Poly<F> {
    let vbasis: Vec<Vect<F>> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| Vect::from_poly(p.clone()))
        .collect();
    reduce_vect(ring, &vbasis, &Vect::from_poly(f.clone()))
        .comps
        .into_iter()
        .next()
        .unwrap()
}

/// Generators of the syzygy module of `gens` inside R^rank: every returned
/// vector w satisfies Σ w[j]·gens[j] = 0, and together they generate the
/// kernel of the map R^gens -> R^rank.
pub fn syzygies_of<F: Field>(
    ring: &PolyRing<F>,
    twists: &[i64],
    gens: &[Vect<F>],
) -> Vec<Vect<F>> {
    module_gb(ring, twists, gens, true).syzygies
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::MonomialOrder;

    fn ring() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, &["x", "y"], MonomialOrder::GrevLex, None).unwrap()
    }

    #[test]
    fn principal_and_monomial_ideals() {
        let r = ring();
        let x = r.var_poly(0);
        let y = r.var_poly(1);
        let gb = reduced_ideal_gb(&r, &[x.clone()]);
        assert_eq!(gb, vec![x.clone()]);
        // (x^2, xy): already a GB; the one S-pair drops to zero
        let gb = reduced_ideal_gb(&r, &[r.mul(&x, &x), r.mul(&x, &y)]);
        assert_eq!(gb.len(), 2);
    }

    #[test]
    fn hand_buchberger_example() {
        // (x^2 + y^2, xy) -> {x^2 + y^2, xy, y^3}
        let r = ring();
        let x = r.var_poly(0);
        let y = r.var_poly(1);
        let f = r.add(&r.mul(&x, &x), &r.mul(&y, &y));
        let g = r.mul(&x, &y);
        let gb = reduced_ideal_gb(&r, &[f.clone(), g.clone()]);
        let strs: Vec<String> = gb.iter().map(|p| r.fmt_poly(p)).collect();
        assert_eq!(strs, vec!["x^2 + y^2", "x*y", "y^3"]);
    }

    #[test]
    fn groebner_is_deterministic() {
        let r = ring();
        let x = r.var_poly(0);
        let y = r.var_poly(1);
        let f = r.add(&r.mul(&x, &x), &r.mul(&y, &y));
        let g = r.mul(&x, &y);
        let gb1 = reduced_ideal_gb(&r, &[f.clone(), g.clone()]);
        let gb2 = reduced_ideal_gb(&r, &[f, g]);
        assert_eq!(gb1, gb2);
    }

    #[test]
    fn koszul_syzygy() {
        // syzygies of the row (x, y): generated by (y, -x)
        let r = ring();
        let x = r.var_poly(0);
        let y = r.var_poly(1);
        let gens = vec![Vect::from_poly(x.clone()), Vect::from_poly(y.clone())];
        let syz = syzygies_of(&r, &[0], &gens);
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        // check it is a syzygy
        let combo = r.add(&r.mul(&s.comps[0], &x), &r.mul(&s.comps[1], &y));
        assert!(combo.is_zero());
        // and proportional to (y, -x)
        assert_eq!(s.comps[0], y);
        assert_eq!(s.comps[1], r.neg(&x));
    }

    #[test]
    fn syzygy_of_non_regular_pair() {
        // (x^2, xy): kernel generated by (y, -x)
        let r = ring();
        let x = r.var_poly(0);
        let y = r.var_poly(1);
        let gens = vec![
            Vect::from_poly(r.mul(&x, &x)),
            Vect::from_poly(r.mul(&x, &y)),
        ];
        let syz = syzygies_of(&r, &[0], &gens);
        assert!(!syz.is_empty());
        for s in &syz {
            let combo = r.add(
                &r.mul(&s.comps[0], &r.mul(&x, &x)),
                &r.mul(&s.comps[1], &r.mul(&x, &y)),
            );
            assert!(combo.is_zero());
        }
        // (y, -x) must be in the span: reduce it against the syzygy GB
        let target = Vect {
            comps: vec![y.clone(), r.neg(&x)],
        };
        let syzgb = reduced_module_gb(&r, &[0, 0], &syz);
        assert!(reduce_vect(&r, &syzgb, &target).is_zero());
    }

    #[test]
    fn identity_map_has_no_syzygies() {
        let r = ring();
        let gens = vec![
            Vect::unit(2, 0, r.one_poly()),
            Vect::unit(2, 1, r.one_poly()),
        ];
        let syz = syzygies_of(&r, &[0, 0], &gens);
        assert!(syz.is_empty());
    }

    #[test]
    fn zero_generator_yields_unit_syzygy() {
        let r = ring();
        let gens = vec![Vect::from_poly(r.var_poly(0)), Vect::from_poly(Poly::zero())];
        let syz = syzygies_of(&r, &[0], &gens);
        assert_eq!(syz.len(), 1);
        assert!(syz[0].comps[0].is_zero());
        assert!(!syz[0].comps[1].is_zero());
    }
}
