//! Benchmark inputs.

use permposet::construct::{build_u, family_gk, Construction};
use permposet::{BlockPartition, PermGroup};

/// `S_n` with the whole domain as its cut block.
pub fn symmetric(n: usize) -> (PermGroup, BlockPartition) {
    let cycle: String = (1..=n).map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
    let g = PermGroup::from_cycle_strings(n, &format!("(1 2),({cycle})"), 1_000_000)
        .expect("valid generators");
    let bp = g
        .validate_orbit_cut(&g.trivial_cut())
        .expect("orbits are blocks");
    (g, bp)
}

pub fn cyclic_wreath(k: usize) -> (PermGroup, BlockPartition) {
    family_gk(k, 1_000_000).expect("k in range")
}

pub fn construction((g, bp): &(PermGroup, BlockPartition)) -> Construction {
    build_u(g, bp).expect("valid partition")
}
