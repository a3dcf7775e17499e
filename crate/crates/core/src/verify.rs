//! Cross-checks between the recursions, the brute-force oracles and the
//! closed forms, reported as a table of named gates.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::bigpoly::{BiPoly, ExactRational};
use crate::error::{check_cap, Result};
use crate::invariants::{
    acyclic_root_connected, bicycle_dimension, diagonal_closed, indegree_sequences_strong,
    potts_direct, potts_partition, spanning_trees_closed, PottsParams,
};
use crate::lattice::{build_lattice, lattice_counts, LatticeFamily};
use crate::oracle::{split_tutte, tutte_deletion_contraction, tutte_subgraph_expansion};
use crate::recursion::Recurrence;

/// Largest generation checked against the brute-force oracles.
pub const MAX_ORACLE_GENERATION: u32 = 2;
/// Closed-form gates always run through this generation.
pub const CLOSED_FORM_GENERATION: u32 = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct GateReport {
    pub gates: Vec<GateResult>,
}

impl GateReport {
    pub fn all_passed(&self) -> bool {
        self.gates.iter().all(|g| g.passed)
    }

    pub fn first_failure(&self) -> Option<&GateResult> {
        self.gates.iter().find(|g| !g.passed)
    }

    pub fn to_text(&self) -> String {
        let width = self.gates.iter().map(|g| g.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for g in &self.gates {
            let status = if g.passed { "PASS" } else { "FAIL" };
            if g.detail.is_empty() {
                let _ = write!(out, "{status}  {}", g.name);
            } else {
                let _ = write!(out, "{status}  {:width$}  {}", g.name, g.detail);
            }
            out.push('\n');
        }
        let passed = self.gates.iter().filter(|g| g.passed).count();
        let _ = writeln!(out, "{passed}/{} gates passed", self.gates.len());
        out
    }

    fn push(&mut self, name: impl Into<String>, outcome: std::result::Result<(), String>) {
        let (passed, detail) = match outcome {
            Ok(()) => (true, String::new()),
            Err(d) => (false, d),
        };
        self.gates.push(GateResult {
            name: name.into(),
            passed,
            detail,
        });
    }
}

/// One recurrence per family; gates are run against whatever this holds.
#[derive(Clone, Debug)]
pub struct RecurrenceSet {
    pub fractal: Recurrence<BiPoly>,
    pub flower22: Recurrence<BiPoly>,
    pub flower13: Recurrence<BiPoly>,
}

impl Default for RecurrenceSet {
    fn default() -> Self {
        Self {
            fractal: Recurrence::for_family(LatticeFamily::Fractal),
            flower22: Recurrence::for_family(LatticeFamily::Flower22),
            flower13: Recurrence::for_family(LatticeFamily::Flower13),
        }
    }
}

impl RecurrenceSet {
    pub fn get(&self, family: LatticeFamily) -> &Recurrence<BiPoly> {
        match family {
            LatticeFamily::Fractal => &self.fractal,
            LatticeFamily::Flower22 => &self.flower22,
            LatticeFamily::Flower13 => &self.flower13,
        }
    }

    fn eval(&self, family: LatticeFamily, n: u32, x: &ExactRational, y: &ExactRational) -> ExactRational {
        let pair = self.get(family).at_point(x, y).iterate(n);
        pair.assemble(&(x - ExactRational::one()))
    }
}

fn int(v: i64) -> ExactRational {
    ExactRational::from_integer(v.into())
}

fn compare_poly(label: &str, got: &BiPoly, want: &BiPoly) -> std::result::Result<(), String> {
    if got == want {
        return Ok(());
    }
    let diff = got - want;
    let ((i, j), c) = diff.terms().next_back().expect("non-zero difference");
    Err(format!(
        "{label}: coefficients of x^{i} y^{j} differ by {c} ({} vs {} terms)",
        got.len(),
        want.len()
    ))
}

fn compare_value(label: &str, got: &ExactRational, want: &ExactRational) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        let show = |v: &ExactRational| {
            let s = v.to_string();
            if s.len() > 40 {
                format!("{}...({} chars)", &s[..40], s.len())
            } else {
                s
            }
        };
        Err(format!("{label}: got {}, expected {}", show(got), show(want)))
    }
}

fn all_ok<I>(checks: I) -> std::result::Result<(), String>
where
    I: IntoIterator<Item = std::result::Result<(), String>>,
{
    checks.into_iter().collect()
}

/// Runs every gate with the standard recurrences.
pub fn run(n_max: u32) -> Result<GateReport> {
    run_with(n_max, &RecurrenceSet::default())
}

/// Runs every gate against `recurrences`. Oracle gates cover generations
/// `0..=n_max`; closed-form gates cover `0..=CLOSED_FORM_GENERATION`.
pub fn run_with(n_max: u32, recurrences: &RecurrenceSet) -> Result<GateReport> {
    check_cap("oracle generation", n_max as u64, MAX_ORACLE_GENERATION as u64)?;
    let mut report = GateReport::default();

    for family in LatticeFamily::ALL {
        for n in 0..=n_max {
            let g = build_lattice(family, n)?;
            let pair = recurrences.get(family).iterate(n);
            let t = pair.tutte();

            let dc = tutte_deletion_contraction(&g)?;
            report.push(
                format!("{family} n={n}: recursion = deletion-contraction"),
                compare_poly("T", &t, &dc),
            );
            let expansion = tutte_subgraph_expansion(&g)?;
            report.push(
                format!("{family} n={n}: recursion = subgraph expansion"),
                compare_poly("T", &t, &expansion),
            );
            let (t1, t2) = split_tutte(&g)?;
            report.push(
                format!("{family} n={n}: (T1, (x-1)N) = joined/separated sums"),
                all_ok([
                    compare_poly("T1", &pair.t1, &t1),
                    compare_poly("T2", &pair.t2(), &t2),
                ]),
            );
        }
    }

    let top = CLOSED_FORM_GENERATION;

    report.push(
        format!("lattice sizes = closed-form counts (n<={top})"),
        all_ok(LatticeFamily::ALL.into_iter().flat_map(|family| {
            (0..=top).map(move |n| {
                let g = build_lattice(family, n).map_err(|e| e.to_string())?;
                let (v, e) = lattice_counts(family, n);
                if BigInt::from(g.vertex_count()) == v && BigInt::from(g.edge_count()) == e {
                    Ok(())
                } else {
                    Err(format!("{family} n={n}: built ({}, {}), closed form ({v}, {e})", g.vertex_count(), g.edge_count()))
                }
            })
        })),
    );

    for family in LatticeFamily::ALL {
        report.push(
            format!("{family} spanning trees: T(1,1) = closed form (n<={top})"),
            all_ok((0..=top).map(|n| {
                let want = ExactRational::from_integer(spanning_trees_closed(family, n).map_err(|e| e.to_string())?);
                compare_value(&format!("n={n}"), &recurrences.eval(family, n, &int(1), &int(1)), &want)
            })),
        );
    }

    let fractal = LatticeFamily::Fractal;
    report.push(
        format!("fractal acyclic orientations: T(1,0) = closed form (1<=n<={top})"),
        all_ok((1..=top).map(|n| {
            let want = ExactRational::from_integer(acyclic_root_connected(n).map_err(|e| e.to_string())?);
            compare_value(&format!("n={n}"), &recurrences.eval(fractal, n, &int(1), &int(0)), &want)
        })),
    );
    report.push(
        format!("fractal strong indegree sequences: T(0,1) = closed form (1<=n<={top})"),
        all_ok((1..=top).map(|n| {
            let want = ExactRational::from_integer(indegree_sequences_strong(n).map_err(|e| e.to_string())?);
            compare_value(&format!("n={n}"), &recurrences.eval(fractal, n, &int(0), &int(1)), &want)
        })),
    );
    report.push(
        "fractal diagonal: T(x,x) = x(x^2+5x+2)^((4^n-1)/3) (n<=3)",
        all_ok((0..=3).map(|n| {
            let t = recurrences.get(fractal).iterate(n).tutte();
            let want = diagonal_closed(n).map_err(|e| e.to_string())?;
            compare_poly(&format!("n={n}"), &t.diagonal(), &want)
        })),
    );
    report.push(
        format!("fractal bicycle space: T(-1,-1) = (-1)^|E| (-2)^dim (n<={top})"),
        all_ok((0..=top).map(|n| {
            let edges = lattice_counts(fractal, n).1;
            let dim = bicycle_dimension(n).to_u32().expect("small dimension");
            let sign = if (edges % 2u32) == BigInt::from(0) { 1 } else { -1 };
            let want = int(sign) * ExactRational::from_integer(BigInt::from(-2).pow(dim));
            compare_value(&format!("n={n}"), &recurrences.eval(fractal, n, &int(-1), &int(-1)), &want)
        })),
    );

    let potts_grid: Vec<PottsParams> = [1, 2, 3]
        .into_iter()
        .flat_map(|q| {
            [ExactRational::new((-1).into(), 2.into()), int(1), int(2)]
                .into_iter()
                .map(move |v| PottsParams::new(int(q), v))
        })
        .collect();
    for family in LatticeFamily::ALL {
        report.push(
            format!("{family} Potts: direct sum = q^k v^(|V|-k) T (n<=1)"),
            all_ok((0..=1).flat_map(|n| {
                let g = build_lattice(family, n).expect("small lattice");
                potts_grid.iter().map(move |params| {
                    let (x, y) = params.tutte_point().map_err(|e| e.to_string())?;
                    let t = recurrences.eval(family, n, &x, &y);
                    let mapped = potts_partition(g.vertex_count(), 1, &t, params).map_err(|e| e.to_string())?;
                    let direct = potts_direct(&g, params).map_err(|e| e.to_string())?;
                    compare_value(&format!("n={n} q={} v={}", params.q, params.v), &mapped, &direct)
                })
            })),
        );
    }

    Ok(report)
}
