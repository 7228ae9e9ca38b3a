//! Differential campaign: the circuit engine against the reference
//! evaluator on generated instances.

use crate::contraction::{check_with, CheckOptions, ContractionTree, Engine, Fault};
use crate::formula::Formula;
use crate::generate::{GenConfig, Generator};
use crate::semantics::eval_seq;
use crate::trace::{BoolSeq, Path};

#[derive(Debug, Clone)]
pub struct Campaign {
    pub seed: u64,
    pub cases: u64,
    pub gen: GenConfig,
    pub workers: usize,
    pub fault: Option<Fault>,
    /// Also assert the contraction-tree conditions after every step.
    /// Costly; meant for small size caps.
    pub check_invariants: bool,
    /// Stop after this many discrepancies.
    pub max_failures: usize,
}

impl Default for Campaign {
    fn default() -> Self {
        Campaign {
            seed: 0,
            cases: 10_000,
            gen: GenConfig::default(),
            workers: 1,
            fault: None,
            check_invariants: false,
            max_failures: 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Case {
    pub index: u64,
    pub formula: Formula,
    pub path: Path,
}

#[derive(Debug, Clone)]
pub struct Discrepancy {
    pub case: Case,
    /// Circuit engine result, or its error message.
    pub circuit: Result<BoolSeq, String>,
    pub naive: BoolSeq,
    pub minimized: (Formula, Path),
}

#[derive(Debug, Clone)]
pub struct Report {
    pub seed: u64,
    pub cases_run: u64,
    pub satisfied: u64,
    pub discrepancies: Vec<Discrepancy>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

impl Campaign {
    pub fn case(&self, index: u64) -> Case {
        let mut g = Generator::for_case(self.seed, index, self.gen);
        let formula = g.formula();
        let path = g.path();
        Case { index, formula, path }
    }

    fn options(&self) -> CheckOptions {
        CheckOptions {
            engine: Engine::Circuit,
            workers: self.workers,
            prune: true,
            fault: self.fault,
        }
    }

    /// The circuit engine's answer, or a description of what went wrong,
    /// including broken tree conditions when those are checked.
    pub fn circuit_result(&self, f: &Formula, rho: &Path) -> Result<BoolSeq, String> {
        if self.check_invariants {
            let pnf = f.to_pnf().prune_bounds(rho.len());
            let mut tree = ContractionTree::new(&pnf, rho).map_err(|e| e.to_string())?;
            tree.set_fault(self.fault);
            tree.check_invariants(&pnf, rho).map_err(|e| e.to_string())?;
            let mut broken = None;
            let (_, run) = tree
                .run(self.workers, |t| {
                    if broken.is_none() {
                        broken = t.check_invariants(&pnf, rho).err();
                    }
                })
                .map_err(|e| e.to_string())?;
            if let Some(e) = broken {
                return Err(e.to_string());
            }
            return Ok(run.sequence);
        }
        check_with(f, rho, &self.options())
            .map(|o| o.sequence)
            .map_err(|e| e.to_string())
    }

    fn disagrees(&self, f: &Formula, rho: &Path) -> bool {
        let naive = eval_seq(rho, f).expect("generated formulas use the path's alphabet");
        self.circuit_result(f, rho).as_ref() != Ok(&naive)
    }

    pub fn run(&self) -> Report {
        self.run_with(|_, _| {})
    }

    /// Runs the campaign, calling `progress` with each case and whether it
    /// passed.
    pub fn run_with(&self, mut progress: impl FnMut(&Case, bool)) -> Report {
        let mut report = Report {
            seed: self.seed,
            cases_run: 0,
            satisfied: 0,
            discrepancies: Vec::new(),
        };
        for index in 0..self.cases {
            let case = self.case(index);
            let naive = eval_seq(&case.path, &case.formula).expect("generated formulas use the path's alphabet");
            let circuit = self.circuit_result(&case.formula, &case.path);
            report.cases_run += 1;
            report.satisfied += u64::from(naive.get(0));
            let ok = circuit.as_ref() == Ok(&naive);
            progress(&case, ok);
            if !ok {
                let minimized = minimize(&case.formula, &case.path, |f, p| self.disagrees(f, p));
                report.discrepancies.push(Discrepancy {
                    case,
                    circuit,
                    naive,
                    minimized,
                });
                if report.discrepancies.len() >= self.max_failures {
                    break;
                }
            }
        }
        report
    }
}

/// Greedy shrinking: halve the path while the failure persists, then
/// replace formula nodes by one of their children, until neither helps.
pub fn minimize(f: &Formula, rho: &Path, fails: impl Fn(&Formula, &Path) -> bool) -> (Formula, Path) {
    let mut f = f.clone();
    let mut rho = rho.clone();
    loop {
        let mut changed = false;
        while rho.len() > 1 {
            let half = rho.len() / 2;
            let candidates = [
                rho.slice(0, half).expect("in range"),
                rho.slice(half, rho.len()).expect("in range"),
            ];
            match candidates.into_iter().find(|p| fails(&f, p)) {
                Some(p) => {
                    rho = p;
                    changed = true;
                }
                None => break,
            }
        }
        if let Some(smaller) = child_replacements(&f).into_iter().find(|g| fails(g, &rho)) {
            f = smaller;
            changed = true;
        }
        if !changed {
            return (f, rho);
        }
    }
}

/// Every formula obtained by replacing one node with one of its children,
/// outermost nodes first.
fn child_replacements(f: &Formula) -> Vec<Formula> {
    let mut out: Vec<Formula> = f.children().into_iter().cloned().collect();
    let rebuild = |f: &Formula, idx: usize, new: Formula| -> Formula {
        match f {
            Formula::Atom(_) => unreachable!("atoms have no children"),
            Formula::Not(_) => Formula::not(new),
            Formula::Shift(op, _) => Formula::shift(*op, new),
            Formula::Bool(op, l, r) => {
                if idx == 0 {
                    Formula::Bool(*op, Box::new(new), r.clone())
                } else {
                    Formula::Bool(*op, l.clone(), Box::new(new))
                }
            }
            Formula::Temporal {
                op,
                bound,
                left,
                right,
            } => {
                if idx == 0 {
                    Formula::temporal(*op, *bound, new, (**right).clone())
                } else {
                    Formula::temporal(*op, *bound, (**left).clone(), new)
                }
            }
        }
    };
    for (idx, child) in f.children().into_iter().enumerate() {
        for replaced in child_replacements(child) {
            out.push(rebuild(f, idx, replaced));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Campaign {
        Campaign {
            cases: 200,
            gen: GenConfig {
                max_nodes: 10,
                max_len: 12,
                max_bound: 4,
            },
            ..Campaign::default()
        }
    }

    #[test]
    fn clean_campaign_passes() {
        let report = small().run();
        assert!(report.passed(), "{:?}", report.discrepancies.first());
        assert_eq!(report.cases_run, 200);
    }

    #[test]
    fn injected_fault_is_caught_and_minimized() {
        let campaign = Campaign {
            fault: Some(Fault::SwapKnownSide),
            ..small()
        };
        let report = campaign.run();
        let d = report.discrepancies.first().expect("fault must be detected");
        let (f, rho) = &d.minimized;
        assert!(campaign.disagrees(f, rho));
        assert!(f.node_count() <= d.case.formula.node_count());
        assert!(rho.len() <= d.case.path.len());
    }

    #[test]
    fn same_seed_same_cases() {
        let c = small();
        for i in [0, 17, 199] {
            let (a, b) = (c.case(i), c.case(i));
            assert_eq!(a.formula, b.formula);
            assert_eq!(a.path.to_csv(), b.path.to_csv());
        }
    }

    #[test]
    fn invariant_checking_campaign() {
        let c = Campaign {
            cases: 60,
            check_invariants: true,
            workers: 2,
            ..small()
        };
        assert!(c.run().passed());
    }

    #[test]
    fn replacements_shrink() {
        let f = Formula::parse("(a U b) & X c").unwrap();
        let reps = child_replacements(&f);
        assert!(reps.iter().all(|g| g.node_count() < f.node_count()));
        assert!(reps.contains(&Formula::parse("X c").unwrap()));
        assert!(reps.contains(&Formula::parse("b & X c").unwrap()));
    }
}
