//! Fundamental group presentations from the dual 2-skeleton, with Tietze
//! simplification, recognition of a few small groups, and homomorphism
//! counts into symmetric groups.

use std::collections::{BTreeSet, VecDeque};

use crate::error::Result;
use crate::homology::{interior_triangles, HomologyGroup};
use crate::triangulation::Triangulation;

/// A letter is `g + 1` for generator `g` and `-(g + 1)` for its inverse.
pub type Word = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: usize,
    pub relations: Vec<Word>,
}

/// What a presentation was recognised as.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupShape {
    Trivial,
    /// `Z` for 0, otherwise `Z/n`.
    Cyclic(u64),
    FreeAbelianRank2,
    Unknown,
}

fn gen_of(letter: i32) -> usize {
    (letter.unsigned_abs() - 1) as usize
}

fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&x| -x).collect()
}

fn free_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

fn cyclic_reduce(w: &[i32]) -> Word {
    let mut w = free_reduce(w);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}

/// Canonical representative of a relator up to rotation and inversion.
fn canonical(w: &[i32]) -> Word {
    let mut best: Option<Word> = None;
    for cand in [w.to_vec(), inverse(w)] {
        for k in 0..cand.len().max(1) {
            let mut rot = cand[k..].to_vec();
            rot.extend_from_slice(&cand[..k]);
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

impl Presentation {
    /// The presentation read off the dual 2-skeleton: generators are the
    /// interior triangles outside a maximal dual forest, relations are the
    /// interior edges.
    pub fn of(tri: &Triangulation) -> Presentation {
        let sk = tri.skeleton();
        let (tindex, oriented) = interior_triangles(tri);
        let mut in_tree = vec![false; oriented.len()];
        let mut seen = vec![false; tri.size()];
        for root in 0..tri.size() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(t) = queue.pop_front() {
                for f in 0..4 {
                    let Some(g) = tri.adjacent(t, f) else { continue };
                    if !seen[g.tet] {
                        seen[g.tet] = true;
                        let row = tindex[sk.triangle_of[t][f]].expect("glued face is interior");
                        in_tree[row] = true;
                        queue.push_back(g.tet);
                    }
                }
            }
        }
        let mut gen_index = vec![None; oriented.len()];
        let mut generators = 0;
        for (row, &tree) in in_tree.iter().enumerate() {
            if !tree {
                gen_index[row] = Some(generators);
                generators += 1;
            }
        }
        let mut relations = vec![];
        for class in sk.edges.iter().filter(|e| !e.boundary) {
            let (tet, en) = class.embeddings[0];
            let ring = tri.edge_ring(tet, en).expect("interior edge has a ring");
            let mut word = vec![];
            for (t, p) in ring {
                let face = p.apply(2);
                let row = tindex[sk.triangle_of[t][face]].expect("ring crosses interior faces");
                if let Some(g) = gen_index[row] {
                    let letter = g as i32 + 1;
                    word.push(if oriented[row] == (t, face) { letter } else { -letter });
                }
            }
            relations.push(word);
        }
        Presentation { generators, relations }
    }

    pub fn total_length(&self) -> usize {
        self.relations.iter().map(|r| r.len()).sum()
    }

    /// Abelianisation, via Smith normal form of the exponent-sum matrix.
    pub fn abelianization(&self) -> Result<HomologyGroup> {
        let m: Vec<Vec<i128>> = (0..self.generators)
            .map(|g| {
                self.relations
                    .iter()
                    .map(|r| {
                        r.iter()
                            .filter(|&&x| gen_of(x) == g)
                            .map(|&x| if x > 0 { 1 } else { -1 })
                            .sum()
                    })
                    .collect()
            })
            .collect();
        if self.relations.is_empty() {
            return Ok(HomologyGroup::free(self.generators));
        }
        HomologyGroup::cokernel(&m, self.generators)
    }

    fn tidy(&mut self) {
        let mut seen = BTreeSet::new();
        let mut out = vec![];
        for r in &self.relations {
            let c = cyclic_reduce(r);
            if c.is_empty() {
                continue;
            }
            if seen.insert(canonical(&c)) {
                out.push(c);
            }
        }
        out.sort_by_key(|r| r.len());
        self.relations = out;
    }

    /// Removes generator `g`, which must not occur in any relation, and
    /// renumbers the rest.
    fn drop_generator(&mut self, g: usize) {
        for r in &mut self.relations {
            for x in r.iter_mut() {
                let h = gen_of(*x);
                debug_assert_ne!(h, g);
                if h > g {
                    *x -= x.signum();
                }
            }
        }
        self.generators -= 1;
    }

    /// Tietze moves: repeatedly eliminate a generator that occurs exactly
    /// once in some relation. Stops when no such move keeps the total
    /// length under `max_length`.
    pub fn simplify(&mut self, max_length: usize) {
        self.tidy();
        loop {
            let mut done = None;
            'search: for (ri, r) in self.relations.iter().enumerate() {
                let mut count = vec![0usize; self.generators];
                for &x in r {
                    count[gen_of(x)] += 1;
                }
                for (pos, &x) in r.iter().enumerate() {
                    if count[gen_of(x)] != 1 {
                        continue;
                    }
                    // r = u x v, so x = u^-1 v^-1 (rotated: x = (v u)^-1).
                    let mut rest: Word = r[pos + 1..].to_vec();
                    rest.extend_from_slice(&r[..pos]);
                    let replacement = if x > 0 { inverse(&rest) } else { rest };
                    let g = gen_of(x);
                    let growth: usize = self
                        .relations
                        .iter()
                        .map(|s| s.iter().filter(|&&y| gen_of(y) == g).count() * replacement.len())
                        .sum();
                    if self.total_length() + growth > max_length {
                        continue;
                    }
                    done = Some((ri, g, replacement));
                    break 'search;
                }
            }
            let Some((ri, g, replacement)) = done else { break };
            self.relations.remove(ri);
            let inv = inverse(&replacement);
            for r in &mut self.relations {
                let mut out = Vec::with_capacity(r.len());
                for &y in r.iter() {
                    if gen_of(y) == g {
                        out.extend_from_slice(if y > 0 { &replacement } else { &inv });
                    } else {
                        out.push(y);
                    }
                }
                *r = out;
            }
            self.drop_generator(g);
            self.tidy();
        }
    }

    /// Recognises the trivial group, cyclic groups and `Z^2` from the
    /// (ideally simplified) presentation.
    pub fn shape(&self) -> GroupShape {
        let mut p = self.clone();
        p.tidy();
        match p.generators {
            0 => GroupShape::Trivial,
            1 => {
                let mut g = 0u64;
                for r in &p.relations {
                    g = gcd(g, r.iter().map(|&x| x.signum() as i64).sum::<i64>().unsigned_abs());
                }
                match g {
                    1 => GroupShape::Trivial,
                    n => GroupShape::Cyclic(n),
                }
            }
            2 if p.relations.len() == 1 => {
                let r = canonical(&p.relations[0]);
                let commutators = [vec![-2, -1, 2, 1], vec![-1, -2, 1, 2]];
                if commutators.iter().any(|c| canonical(c) == r) {
                    GroupShape::FreeAbelianRank2
                } else {
                    GroupShape::Unknown
                }
            }
            _ => GroupShape::Unknown,
        }
    }

    /// Number of homomorphisms into the symmetric group on `n` points, or
    /// `None` if the search would visit more than `limit` assignments.
    pub fn count_homs_to_symmetric(&self, n: usize, limit: u64) -> Option<u64> {
        let elements = symmetric_group(n);
        let order = elements.len() as u64;
        if order.checked_pow(self.generators as u32).map_or(true, |x| x > limit) {
            return None;
        }
        // Check each relation as soon as its largest generator is assigned.
        let mut by_last: Vec<Vec<&Word>> = vec![vec![]; self.generators];
        for r in &self.relations {
            if let Some(m) = r.iter().map(|&x| gen_of(x)).max() {
                by_last[m].push(r);
            }
        }
        let inverses: Vec<Vec<u8>> = elements.iter().map(|p| invert(p)).collect();
        let mut images: Vec<usize> = vec![0; self.generators];
        let mut count = 0;
        count_rec(0, &mut images, &elements, &inverses, &by_last, n, &mut count);
        Some(count)
    }
}

fn count_rec(
    g: usize,
    images: &mut Vec<usize>,
    elements: &[Vec<u8>],
    inverses: &[Vec<u8>],
    by_last: &[Vec<&Word>],
    n: usize,
    count: &mut u64,
) {
    if g == images.len() {
        *count += 1;
        return;
    }
    for e in 0..elements.len() {
        images[g] = e;
        let ok = by_last[g].iter().all(|r| {
            let mut cur: Vec<u8> = (0..n as u8).collect();
            for &x in r.iter() {
                let img = images[gen_of(x)];
                let p = if x > 0 { &elements[img] } else { &inverses[img] };
                cur = cur.iter().map(|&i| p[i as usize]).collect();
            }
            cur.iter().enumerate().all(|(i, &j)| i == j as usize)
        });
        if ok {
            count_rec(g + 1, images, elements, inverses, by_last, n, count);
        }
    }
}

fn invert(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j as usize] = i as u8;
    }
    inv
}

fn symmetric_group(n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![];
    let mut cur: Vec<u8> = (0..n as u8).collect();
    permutations(&mut cur, 0, &mut out);
    out
}

fn permutations(cur: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permutations(cur, k + 1, out);
        cur.swap(k, i);
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Partition numbers, for the count of commuting pairs in `S_n`.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            p[m] += p[m - k];
        }
    }
    p[n]
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
