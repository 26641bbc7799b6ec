//! Random instances and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use permposet::{ElementTag, PermGroup, Permutation, Point, Poset};
use rand::seq::SliceRandom;
use rand::Rng;

/// A random subgroup of `S_n`. Generators permute a random subset of the
/// points, so intransitive groups turn up as often as transitive ones.
pub fn random_group<R: Rng>(rng: &mut R, n: usize) -> PermGroup {
    let count = rng.gen_range(0..=3);
    let mut gens = Vec::with_capacity(count);
    for _ in 0..count {
        let support: Vec<Point> = (0..n as Point).filter(|_| rng.gen_bool(0.7)).collect();
        let mut images = support.clone();
        images.shuffle(rng);
        let mut full: Vec<Point> = (0..n as Point).collect();
        for (&x, &y) in support.iter().zip(&images) {
            full[x as usize] = y;
        }
        gens.push(Permutation::from_images(full).unwrap());
    }
    PermGroup::closure(n, gens).unwrap()
}

/// A random valid orbit cut: per orbit, a singleton, the whole orbit or the
/// block generated by two of its points.
pub fn random_cut<R: Rng>(rng: &mut R, g: &PermGroup) -> Vec<Vec<Point>> {
    g.orbits()
        .into_iter()
        .map(|orbit| {
            let p = *orbit.choose(rng).unwrap();
            match rng.gen_range(0..3) {
                0 => vec![p],
                1 => orbit,
                _ => {
                    let q = *orbit.choose(rng).unwrap();
                    g.minimal_block(&[p, q]).unwrap()
                }
            }
        })
        .collect()
}

pub fn tags(n: usize) -> Vec<ElementTag> {
    (0..n).map(|i| ElementTag::Extra(format!("x{i}"))).collect()
}

/// Random poset on `n` elements: each pair `i < j` (after a random
/// relabelling) is a generating pair with probability `density`.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((label[i], label[j]));
            }
        }
    }
    Poset::from_covers(tags(n), pairs).unwrap()
}

/// Dense `leq` table.
pub fn leq_table(p: &Poset) -> Vec<Vec<bool>> {
    (0..p.len())
        .map(|x| (0..p.len()).map(|y| p.leq(x, y)).collect())
        .collect()
}

/// Every bijection `m` with `x ≤ y ⟺ m(x) ≤ m(y)`, by trying all `n!`
/// permutations in lexicographic order.
pub fn brute_force_automorphisms(p: &Poset) -> BTreeSet<Vec<usize>> {
    let n = p.len();
    let leq = leq_table(p);
    let mut out = BTreeSet::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let ok = (0..n).all(|x| (0..n).all(|y| leq[x][y] == leq[perm[x]][perm[y]]));
        if ok {
            out.insert(perm.clone());
        }
        if !next_permutation(&mut perm) {
            return out;
        }
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Least common bound of `x` and `y` by definition: a common bound lying
/// below (or above, for meets) every other common bound.
fn has_extremal_bound(leq: &[Vec<bool>], x: usize, y: usize, upward: bool) -> bool {
    let n = leq.len();
    let rel = |a: usize, b: usize| if upward { leq[a][b] } else { leq[b][a] };
    let bounds: Vec<usize> = (0..n).filter(|&z| rel(x, z) && rel(y, z)).collect();
    bounds.iter().any(|&z| bounds.iter().all(|&w| rel(z, w)))
}

pub fn lattice_oracle(p: &Poset) -> bool {
    let leq = leq_table(p);
    let n = p.len();
    (0..n).all(|x| {
        (0..n)
            .all(|y| has_extremal_bound(&leq, x, y, true) && has_extremal_bound(&leq, x, y, false))
    })
}

/// Smallest block of `g` containing `seed`, by checking every subset of the
/// seed's orbit.
pub fn minimal_block_oracle(g: &PermGroup, seed: &[Point]) -> Vec<Point> {
    let orbit = g
        .orbits()
        .into_iter()
        .find(|o| o.contains(&seed[0]))
        .unwrap();
    let mut best: Option<Vec<Point>> = None;
    for mask in 0u32..1 << orbit.len() {
        let set: Vec<Point> = (0..orbit.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| orbit[i])
            .collect();
        if !seed.iter().all(|s| set.contains(s)) {
            continue;
        }
        let is_block = g.elements().iter().all(|s| {
            let image = s.image_of_set(&set);
            image == set || image.iter().all(|x| !set.contains(x))
        });
        if is_block && best.as_ref().is_none_or(|b| set.len() < b.len()) {
            best = Some(set);
        }
    }
    best.unwrap()
}
