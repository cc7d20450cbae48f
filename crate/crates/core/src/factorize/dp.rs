//! Dynamic program over (product permutation, support partition) states.
//!
//! A state after `j` steps is the product `π = δ_1 ⋯ δ_j` together with the
//! orbits of `⟨δ_1, …, δ_j⟩`. Simultaneous conjugation by any `g ∈ S_n`
//! maps the set of `d`-cycles onto itself and commutes with the step
//! `(π, P) ↦ (π ∘ ω, P ∨ supp ω)`, so the number of tuples reaching a state
//! is constant on conjugation orbits of states. The table therefore keeps one
//! entry per orbit, holding the total number of tuples landing anywhere in
//! that orbit. An orbit is identified by the multiset of cycle types of `π`
//! restricted to each block of `P`; transitions are evaluated on one concrete
//! representative, with real supports.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::perm::{all_d_cycles, class_size, Partition, Permutation};

use super::SupportPartition;

/// Orbit of a DP state: per-block cycle types, sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrbitKey {
    blocks: Vec<Partition>,
}

impl OrbitKey {
    fn of(pi: &Permutation, support: &SupportPartition) -> OrbitKey {
        let mut per_block: Vec<Vec<usize>> = vec![Vec::new(); support.num_blocks()];
        for cycle in pi.cycles0() {
            per_block[support.label0(cycle[0])].push(cycle.len());
        }
        let mut blocks: Vec<Partition> = per_block
            .into_iter()
            .map(|mut lens| {
                lens.sort_unstable_by(|a, b| b.cmp(a));
                Partition::from_sorted_unchecked(lens)
            })
            .collect();
        blocks.sort();
        OrbitKey { blocks }
    }

    /// Cycle type of the product, per block.
    pub fn blocks(&self) -> &[Partition] {
        &self.blocks
    }

    /// Cycle type of the whole product.
    pub fn product_type(&self) -> Partition {
        self.blocks
            .iter()
            .fold(Partition::empty(), |acc, b| acc.union(b))
    }

    pub fn is_transitive(&self) -> bool {
        self.blocks.len() <= 1
    }

    /// A concrete state in this orbit: blocks laid out consecutively, cycles
    /// consecutive inside each block.
    pub fn representative(&self) -> (Permutation, SupportPartition) {
        let n: usize = self.blocks.iter().map(Partition::weight).sum();
        let mut images = Vec::with_capacity(n);
        let mut labels = Vec::with_capacity(n);
        let mut start = 0;
        for (b, block) in self.blocks.iter().enumerate() {
            for &len in block.parts() {
                for i in 0..len {
                    images.push(start + (i + 1) % len);
                    labels.push(b as u8);
                }
                start += len;
            }
        }
        (
            Permutation::from_images0(images),
            SupportPartition::from_labels(labels),
        )
    }
}

/// Layered counts of `d`-cycle tuples by state orbit.
pub struct FactorizationDp {
    n: usize,
    d: usize,
    layers: Vec<HashMap<OrbitKey, BigUint>>,
}

impl FactorizationDp {
    /// Runs `k_max` steps from the identity with every point in its own block.
    pub fn run(n: usize, d: usize, k_max: usize) -> Self {
        let cycles = all_d_cycles(n, d);
        let supports: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.support().into_iter().map(|x| x - 1).collect())
            .collect();
        let start = OrbitKey::of(&Permutation::identity(n), &SupportPartition::discrete(n));
        let mut layers = vec![HashMap::from([(start, BigUint::from(1u32))])];
        let mut transitions: HashMap<OrbitKey, Vec<(OrbitKey, u64)>> = HashMap::new();

        for _ in 0..k_max {
            let prev = layers.last().expect("layer 0 exists");
            let mut next: HashMap<OrbitKey, BigUint> = HashMap::new();
            for (key, weight) in prev {
                let targets = transitions.entry(key.clone()).or_insert_with(|| {
                    let (pi, support) = key.representative();
                    let mut tally: HashMap<OrbitKey, u64> = HashMap::new();
                    for (omega, supp) in cycles.iter().zip(&supports) {
                        let next_pi = pi.compose_unchecked(omega);
                        let next_support = support.merge0(supp);
                        *tally.entry(OrbitKey::of(&next_pi, &next_support)).or_default() += 1;
                    }
                    let mut v: Vec<(OrbitKey, u64)> = tally.into_iter().collect();
                    v.sort();
                    v
                });
                for (target, mult) in targets.iter() {
                    *next.entry(target.clone()).or_default() += weight * BigUint::from(*mult);
                }
            }
            layers.push(next);
        }
        FactorizationDp { n, d, layers }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k_max(&self) -> usize {
        self.layers.len() - 1
    }

    /// End-state orbits after `k` steps with their tuple counts, sorted.
    pub fn end_states(&self, k: usize) -> Vec<(OrbitKey, BigUint)> {
        let mut v: Vec<(OrbitKey, BigUint)> = self.layers[k]
            .iter()
            .map(|(key, w)| (key.clone(), w.clone()))
            .collect();
        v.sort();
        v
    }

    /// Number of `k`-tuples whose product has type `alpha` (any representative),
    /// optionally restricted to transitive tuples.
    pub fn total_count(&self, k: usize, alpha: &Partition, transitive: bool) -> BigUint {
        let Some(layer) = self.layers.get(k) else {
            return BigUint::zero();
        };
        layer
            .iter()
            .filter(|(key, _)| !transitive || key.is_transitive())
            .filter(|(key, _)| &key.product_type() == alpha)
            .map(|(_, w)| w.clone())
            .sum()
    }

    /// Number of `k`-tuples whose product equals one fixed permutation of type `alpha`.
    pub fn count(&self, k: usize, alpha: &Partition, transitive: bool) -> BigUint {
        let total = self.total_count(k, alpha, transitive);
        let (q, r) = total.div_rem(&class_size(alpha));
        debug_assert!(r.is_zero(), "orbit total not divisible by class size");
        q
    }

    pub fn num_orbits(&self, k: usize) -> usize {
        self.layers.get(k).map_or(0, HashMap::len)
    }
}
