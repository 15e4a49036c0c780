//! Verification driver: runs the identity and property checks over the
//! exhaustive and seeded families and reports each check by name.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::cmap::{EdgeSubset, SignedCyclicGraph};
use crate::diagram::VirtualDiagram;
use crate::families;
use crate::fixtures;
use crate::format::write_graph;
use crate::invariants::{bracket, f_expansion, f_recursive, f_recursive_with_order, verify_tait_bracket};
use crate::medial::{medial, MedialError};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_edges: usize,
    pub max_vertices: usize,
    pub random_count: usize,
    pub random_max_edges: usize,
    pub random_max_vertices: usize,
    pub seed: u64,
    pub orders_per_instance: usize,
    pub r2_cases: usize,
    pub max_crossings: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_edges: 4,
            max_vertices: 3,
            random_count: 200,
            random_max_edges: 8,
            random_max_vertices: 4,
            seed: 0x5eed,
            orders_per_instance: 5,
            r2_cases: 50,
            max_crossings: 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.instances > 0
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "instances": self.instances,
            "failures": self.failures,
            "passed": self.passed(),
            "first_failure": self.first_failure,
        })
    }
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} instances, {} failures)", self.name, self.instances, self.failures)?;
        if let Some(msg) = &self.first_failure {
            write!(f, ": {msg}")?;
        }
        Ok(())
    }
}

pub fn check<T: Sync>(name: &'static str, items: &[T], f: impl Fn(usize, &T) -> Result<(), String> + Sync) -> CheckResult {
    let outcomes: Vec<Result<(), String>> = items.par_iter().enumerate().map(|(i, x)| f(i, x)).collect();
    let failures = outcomes.iter().filter(|o| o.is_err()).count();
    CheckResult {
        name,
        instances: items.len(),
        failures,
        first_failure: outcomes.into_iter().find_map(Result::err),
    }
}

fn describe(g: &SignedCyclicGraph) -> String {
    write_graph(g).trim_end().replace('\n', "; ")
}

/// The exhaustive family followed by the seeded random instances.
pub struct GraphFamily {
    pub exhaustive: Vec<SignedCyclicGraph>,
    pub random: Vec<SignedCyclicGraph>,
}

impl GraphFamily {
    pub fn new(cfg: &SuiteConfig) -> Self {
        GraphFamily {
            exhaustive: families::exhaustive_graphs(cfg.max_edges, cfg.max_vertices),
            random: families::random_graphs(cfg.random_count, cfg.random_max_vertices, cfg.random_max_edges, cfg.seed),
        }
    }

    pub fn all(&self) -> Vec<SignedCyclicGraph> {
        self.exhaustive.iter().chain(&self.random).cloned().collect()
    }
}

pub fn check_graph_bracket(graphs: &[SignedCyclicGraph]) -> CheckResult {
    check("expansion = recursion = medial bracket", graphs, |_, g| {
        let e = f_expansion(g);
        let r = f_recursive(g);
        let b = bracket(&medial(g).0);
        if e == r && e == b {
            Ok(())
        } else {
            Err(format!("{}: expansion {e}, recursion {r}, bracket {b}", describe(g)))
        }
    })
}

pub fn check_recursion_matches_expansion(graphs: &[SignedCyclicGraph]) -> CheckResult {
    check("recursion = expansion", graphs, |_, g| {
        let (e, r) = (f_expansion(g), f_recursive(g));
        (e == r).then_some(()).ok_or_else(|| format!("{}: expansion {e}, recursion {r}", describe(g)))
    })
}

pub fn check_expansion_matches_medial(graphs: &[SignedCyclicGraph]) -> CheckResult {
    check("expansion = medial bracket", graphs, |_, g| {
        let (e, b) = (f_expansion(g), bracket(&medial(g).0));
        (e == b).then_some(()).ok_or_else(|| format!("{}: expansion {e}, bracket {b}", describe(g)))
    })
}

pub fn check_order_independence(graphs: &[SignedCyclicGraph], orders: usize, seed: u64) -> CheckResult {
    check("recursion independent of edge order", graphs, |i, g| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let base = f_recursive(g);
        let mut order: Vec<usize> = (0..g.edge_count()).collect();
        for _ in 0..orders {
            order.shuffle(&mut rng);
            let p = f_recursive_with_order(g, &order);
            if p != base {
                return Err(format!("{}: order {order:?} gives {p}, default gives {base}", describe(g)));
            }
        }
        Ok(())
    })
}

pub fn check_medial_anchors(graphs: &[SignedCyclicGraph]) -> CheckResult {
    check("medial colorable, vertex/edge-parallel loop counts", graphs, |_, g| {
        let (d, map) = medial(g);
        if !d.checkerboard_colorable() {
            return Err(format!("{}: medial diagram not colorable", describe(g)));
        }
        let vp = d.loop_count(&map.vertex_parallel_state()).expect("complete state");
        let ep = d.loop_count(&map.edge_parallel_state()).expect("complete state");
        let bc = g.boundary_components(&g.full_subset()).expect("own subset");
        if vp != g.vertex_count() || ep != bc {
            return Err(format!(
                "{}: vertex-parallel {vp} loops vs {} vertices, edge-parallel {ep} loops vs {bc} boundary components",
                describe(g),
                g.vertex_count()
            ));
        }
        Ok(())
    })
}

/// Both Tait graphs of every colorable diagram reproduce its bracket, and
/// non-colorable diagrams are reported as such.
pub fn check_tait_round_trip(diagrams: &[VirtualDiagram], expect_colorable: &[bool]) -> CheckResult {
    check("bracket = expansion of both Tait graphs", diagrams, |i, d| match (verify_tait_bracket(d), expect_colorable[i]) {
        (Ok(r), true) if r.is_equal() => Ok(()),
        (Ok(r), true) => Err(format!(
            "diagram {i}: bracket {}, Tait {}, complement Tait {}",
            r.bracket, r.canonical, r.complement
        )),
        (Err(MedialError::NotColorable), false) => Ok(()),
        (Ok(_), false) => Err(format!("diagram {i}: expected not colorable")),
        (Err(e), _) => Err(format!("diagram {i}: {e}")),
    })
}

pub fn tait_cases(graphs: &[SignedCyclicGraph]) -> (Vec<VirtualDiagram>, Vec<bool>) {
    let mut diagrams = Vec::new();
    let mut colorable = Vec::new();
    for d in fixtures::all_diagrams() {
        colorable.push(d.checkerboard_colorable());
        diagrams.push(d);
    }
    for g in graphs {
        diagrams.push(medial(g).0);
        colorable.push(true);
    }
    (diagrams, colorable)
}

pub fn check_partial_dual_virtualize(graphs: &[SignedCyclicGraph]) -> CheckResult {
    check("medial of partial dual = virtualized medial", graphs, |_, g| {
        let (d, map) = medial(g);
        for e in 0..g.edge_count() {
            let left = bracket(&medial(&g.partial_dual_edge(e).expect("edge exists")).0);
            let right = bracket(&d.virtualize(map.crossing_of(e)).expect("crossing exists"));
            if left != right {
                return Err(format!("{} at edge {e}: {left} vs {right}", describe(g)));
            }
        }
        Ok(())
    })
}

pub fn check_virtualize_switch(diagrams: &[VirtualDiagram]) -> CheckResult {
    check("virtualize and switch agree on the bracket", diagrams, |i, d| {
        for c in 0..d.crossing_count() {
            let v = bracket(&d.virtualize(c).expect("crossing exists"));
            let s = bracket(&d.switch_crossing(c).expect("crossing exists"));
            if v != s {
                return Err(format!("diagram {i} {:?} at crossing {c}: {v} vs {s}", d.mates()));
            }
        }
        Ok(())
    })
}

/// Seeded `(diagram, segment pair)` cases over the fixtures.
pub fn r2_cases(count: usize, seed: u64) -> Vec<(VirtualDiagram, usize, usize)> {
    let pool = fixtures::all_diagrams();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let d = pool[out.len() % pool.len()].clone();
        let n = d.segment_count();
        let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if d.r2_insert(x, y).is_ok() {
            out.push((d, x, y));
        }
    }
    out
}

pub fn check_r2_invariance(cases: &[(VirtualDiagram, usize, usize)]) -> CheckResult {
    check("normalized bracket unchanged by a second-move clasp", cases, |i, (d, x, y)| {
        let before = bracket(d).specialize_jones();
        let after = bracket(&d.r2_insert(*x, *y).expect("case was validated")).specialize_jones();
        (before == after)
            .then_some(())
            .ok_or_else(|| format!("case {i} (segments {x}, {y}): {before} vs {after}"))
    })
}

pub fn check_kernel_laws(graphs: &[SignedCyclicGraph]) -> CheckResult {
    check("boundary parity, planar formula, partial-dual involution", graphs, |_, g| {
        let m = g.edge_count();
        let planar = g.genus() == 0;
        for mask in 0..1u64 << m {
            let s = EdgeSubset::from_mask(m, mask);
            let bc = g.boundary_components_mask(mask);
            let es = mask.count_ones() as usize;
            let v = g.vertex_count();
            if bc % 2 != (es + v) % 2 {
                return Err(format!("{}: parity fails on subset {mask:#b}", describe(g)));
            }
            if planar {
                let c = g.component_count_of(&s).expect("own subset");
                if bc + v != es + 2 * c {
                    return Err(format!("{}: planar formula fails on subset {mask:#b}", describe(g)));
                }
            }
            let back = g.partial_dual(&s).and_then(|h| h.partial_dual(&s)).expect("own subset");
            if &back != g {
                return Err(format!("{}: partial dual at {mask:#b} is not an involution", describe(g)));
            }
        }
        Ok(())
    })
}

/// Every check in a fixed order.
pub fn run(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let family = GraphFamily::new(cfg);
    let all = family.all();
    let (tait_diagrams, colorable) = tait_cases(&all);
    let mut diagrams = Vec::new();
    for n in 1..=cfg.max_crossings {
        diagrams.extend(families::exhaustive_diagrams(n));
    }
    vec![
        check_order_independence(&all, cfg.orders_per_instance, cfg.seed),
        check_recursion_matches_expansion(&family.exhaustive),
        check_expansion_matches_medial(&all),
        check_medial_anchors(&all),
        check_r2_invariance(&r2_cases(cfg.r2_cases, cfg.seed)),
        check_partial_dual_virtualize(&family.exhaustive),
        check_virtualize_switch(&diagrams),
        check_graph_bracket(&all),
        check_tait_round_trip(&tait_diagrams, &colorable),
        check_kernel_laws(&family.exhaustive),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let cfg = SuiteConfig {
            max_edges: 2,
            max_vertices: 2,
            random_count: 10,
            random_max_edges: 4,
            random_max_vertices: 3,
            r2_cases: 8,
            max_crossings: 1,
            ..SuiteConfig::default()
        };
        for r in run(&cfg) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn check_reports_first_failure() {
        let r = check("odd", &[1, 2, 3, 4], |_, x| if x % 2 == 0 { Err(format!("{x}")) } else { Ok(()) });
        assert_eq!(r.failures, 2);
        assert_eq!(r.first_failure.as_deref(), Some("2"));
        assert!(!r.passed());
        assert_eq!(r.to_string(), "FAIL odd (4 instances, 2 failures): 2");
    }
}
