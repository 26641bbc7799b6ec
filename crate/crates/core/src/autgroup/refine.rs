//! Colour refinement on the cover relation.
//!
//! A colouring is a vector of class numbers `0..k`. Each round replaces an
//! element's colour by the rank of its signature (own colour, sorted colours
//! of upper covers, sorted colours of lower covers) among all signatures.
//! Ranks depend only on colours, never on element indices, so the result is
//! invariant under automorphisms that preserve the starting colouring.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
    classes: usize,
    /// Hash of the refinement history; equal for nodes related by an
    /// automorphism.
    trace: u64,
}

impl Coloring {
    pub fn uniform(n: usize) -> Self {
        Self {
            colors: vec![0; n],
            classes: usize::from(n > 0),
            trace: 0,
        }
    }

    /// Renumbers arbitrary labels to `0..k`, keeping their relative order.
    pub fn from_labels(labels: &[u32]) -> Self {
        let mut distinct = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = labels
            .iter()
            .map(|l| distinct.binary_search(l).expect("present") as u32)
            .collect();
        Self {
            colors,
            classes: distinct.len(),
            trace: 0,
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, x: usize) -> u32 {
        self.colors[x]
    }

    pub fn num_classes(&self) -> usize {
        self.classes
    }

    pub fn trace(&self) -> u64 {
        self.trace
    }

    pub fn is_discrete(&self) -> bool {
        self.classes == self.colors.len()
    }

    /// Members of each class, classes in colour order and members ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for (x, &c) in self.colors.iter().enumerate() {
            out[c as usize].push(x);
        }
        out
    }

    /// The first smallest class with more than one member.
    pub fn target_cell(&self) -> Option<Vec<usize>> {
        self.classes()
            .into_iter()
            .filter(|c| c.len() > 1)
            .min_by_key(Vec::len)
    }

    /// Gives `v` a colour of its own, placed just before the rest of its
    /// class.
    pub fn individualize(&self, v: usize) -> Self {
        let labels: Vec<u32> = self
            .colors
            .iter()
            .enumerate()
            .map(|(x, &c)| 2 * c + u32::from(x != v))
            .collect();
        let mut out = Self::from_labels(&labels);
        let mut h = DefaultHasher::new();
        (self.trace, self.colors[v]).hash(&mut h);
        out.trace = h.finish();
        out
    }
}

/// Refines `start` to the coarsest stable colouring below it.
pub fn refine(p: &Poset, start: &Coloring) -> Coloring {
    refine_counted(p, start).0
}

/// As [`refine`], also returning the number of rounds that split a class.
pub(crate) fn refine_counted(p: &Poset, start: &Coloring) -> (Coloring, usize) {
    let n = p.len();
    let mut current = start.clone();
    let mut rounds = 0;
    let mut sigs: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        for (x, sig) in sigs.iter_mut().enumerate() {
            sig.clear();
            sig.push(current.colors[x]);
            let up = p.upper_covers(x);
            sig.push(up.len() as u32);
            let start_up = sig.len();
            sig.extend(up.iter().map(|&y| current.colors[y]));
            sig[start_up..].sort_unstable();
            let start_down = sig.len();
            sig.extend(p.lower_covers(x).iter().map(|&y| current.colors[y]));
            sig[start_down..].sort_unstable();
        }
        order.sort_unstable_by(|&a, &b| sigs[a].cmp(&sigs[b]));

        let mut next = vec![0u32; n];
        let mut h = DefaultHasher::new();
        current.trace.hash(&mut h);
        let mut class = 0u32;
        let mut run = 0u32;
        for (k, &x) in order.iter().enumerate() {
            if k > 0 && sigs[x] != sigs[order[k - 1]] {
                sigs[order[k - 1]].hash(&mut h);
                run.hash(&mut h);
                class += 1;
                run = 0;
            }
            run += 1;
            next[x] = class;
        }
        if let Some(&last) = order.last() {
            sigs[last].hash(&mut h);
            run.hash(&mut h);
        }
        let classes = if n == 0 { 0 } else { class as usize + 1 };
        let stable = classes == current.classes;
        current = Coloring {
            colors: next,
            classes,
            trace: h.finish(),
        };
        if stable {
            return (current, rounds);
        }
        rounds += 1;
    }
}
