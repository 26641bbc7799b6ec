use num_rational::Ratio;

use crate::permgroup::{BlockPartition, PermGroup};

/// `(|B_i|, m_i, |G⟲B_i|)` for one orbit-cut block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitTerm {
    pub block_size: usize,
    pub m: usize,
    pub setwise_order: usize,
}

impl OrbitTerm {
    /// `|B_i| · m_i² · |G⟲B_i|`, the number of `(j, μ)` points it contributes.
    pub fn d_points(&self) -> u128 {
        let m = self.m as u128;
        self.block_size as u128 * m * m * self.setwise_order as u128
    }
}

/// The factored count, available when the block action is transitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitiveIdentity {
    pub kernel_order: usize,
    pub num_blocks: usize,
    pub block_action_order: usize,
    /// `|G| (1 + 3n/|G| + (|G⟲B_1|/|N|)(|𝓑| n / |G⟲𝓑|))`.
    pub value: Ratio<u128>,
    /// `value` equals the general count.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SizeReport {
    pub n: usize,
    pub order_of_g: usize,
    pub count_actual: Option<usize>,
    /// `|G| + 3n + Σ |B_i| m_i² |G⟲B_i|`.
    pub count_predicted: u128,
    pub per_orbit_terms: Vec<OrbitTerm>,
    pub transitive_identity: Option<TransitiveIdentity>,
    /// `|G| (1 + (|G⟲B_1|/|N|)(n + 3))`, when `G` is transitive.
    pub transitive_bound: Option<Ratio<u128>>,
    pub bound_holds: Option<bool>,
    /// Element count over `|G|`; uses the actual count once known.
    pub ratio: Ratio<u128>,
}

impl SizeReport {
    pub(crate) fn set_actual(&mut self, count: usize) {
        self.count_actual = Some(count);
        self.ratio = Ratio::new(count as u128, self.order_of_g as u128);
    }

    /// Actual and predicted counts agree (vacuous before building).
    pub fn counts_agree(&self) -> bool {
        self.count_actual
            .is_none_or(|a| a as u128 == self.count_predicted)
    }
}

pub fn predicted_size(g: &PermGroup, bp: &BlockPartition) -> SizeReport {
    let n = g.degree();
    let order = g.order();
    let per_orbit_terms: Vec<OrbitTerm> = bp
        .orbit_cut
        .iter()
        .zip(&bp.m)
        .map(|(b, &m)| OrbitTerm {
            block_size: b.len(),
            m,
            setwise_order: g.setwise_action(b).len(),
        })
        .collect();
    let count_predicted = order as u128
        + 3 * n as u128
        + per_orbit_terms
            .iter()
            .map(OrbitTerm::d_points)
            .sum::<u128>();

    let action = bp.block_action(g);
    let g_ord = Ratio::from_integer(order as u128);
    let n_r = Ratio::from_integer(n as u128);
    let one = Ratio::from_integer(1u128);
    let kernel_share =
        |t: &OrbitTerm| Ratio::new(t.setwise_order as u128, action.kernel_order as u128);

    let transitive_identity = (action.is_transitive() && !per_orbit_terms.is_empty()).then(|| {
        let t = &per_orbit_terms[0];
        let num_blocks = bp.num_blocks();
        let value = g_ord
            * (one
                + Ratio::from_integer(3) * n_r / g_ord
                + kernel_share(t)
                    * Ratio::new((num_blocks * n) as u128, action.group.order() as u128));
        TransitiveIdentity {
            kernel_order: action.kernel_order,
            num_blocks,
            block_action_order: action.group.order(),
            holds: value == Ratio::from_integer(count_predicted),
            value,
        }
    });

    let transitive_bound = (g.is_transitive() && !per_orbit_terms.is_empty()).then(|| {
        g_ord * (one + kernel_share(&per_orbit_terms[0]) * Ratio::from_integer(n as u128 + 3))
    });
    let bound_holds = transitive_bound.map(|b| Ratio::from_integer(count_predicted) <= b);

    SizeReport {
        n,
        order_of_g: order,
        count_actual: None,
        count_predicted,
        per_orbit_terms,
        transitive_identity,
        transitive_bound,
        bound_holds,
        ratio: Ratio::new(count_predicted, order as u128),
    }
}
