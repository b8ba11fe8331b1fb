//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qcharsum::verify::{find, run_check, CheckParams, CheckReport, QSelect, Status};

struct Run {
    id: &'static str,
    nmax: usize,
    order: usize,
    q: QSelect,
}

fn sym(id: &'static str, nmax: usize, order: usize) -> Run {
    Run { id, nmax, order, q: QSelect::Symbolic }
}

struct Criterion {
    label: &'static str,
    runs: Vec<Run>,
    limit: Duration,
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion { label: "GL even q: real degree sum equals involution count, n <= 8", runs: vec![sym("thm-even", 8, 0)], limit: secs(60) },
        Criterion {
            label: "GL odd q and the two q-series identities, order 10",
            runs: vec![sym("thm-odd", 10, 0), sym("cor-iden", 0, 10), sym("cor-cort", 0, 10)],
            limit: secs(60),
        },
        Criterion { label: "i_GL(n,q) table for n = 1..7", runs: vec![sym("remark-igl-table", 7, 0)], limit: secs(60) },
        Criterion {
            label: "U(2,q) and U(3,q) worked examples by both routes",
            runs: vec![sym("example-u2-even", 2, 0), sym("example-u3-even", 3, 0), sym("example-u2-odd", 2, 0)],
            limit: secs(60),
        },
        Criterion {
            label: "P_(2), P_(1,1) displayed values and the finite oracle, |lambda| <= 5",
            runs: vec![sym("example-u2-even", 2, 0), sym("oracle-hl-finite", 5, 0)],
            limit: secs(120),
        },
        Criterion { label: "Warnaar identity and its a-only specialization to order 8", runs: vec![sym("thm-warid", 0, 8), sym("cor-warcor", 0, 8)], limit: secs(120) },
        Criterion {
            label: "matrix enumeration of h^2 = 1 for the ten listed groups",
            runs: vec![Run { id: "oracle-brute-involutions", nmax: 4, order: 0, q: QSelect::List(vec![]) }],
            limit: secs(300),
        },
        Criterion {
            label: "enumerated real degree sums, gl n <= 4 and u n <= 3, q in {2,3}",
            runs: vec![Run { id: "oracle-real-sums", nmax: 4, order: 0, q: QSelect::List(vec![2, 3]) }],
            limit: secs(300),
        },
        Criterion {
            label: "Weyl groups A, B, D: degree sum equals involution count, n <= 12",
            runs: vec![sym("weyl-A", 12, 0), sym("weyl-B", 12, 0), sym("weyl-D", 12, 0)],
            limit: secs(60),
        },
        Criterion {
            label: "odd partition-sum expressions agree and indicator splits are consistent, n <= 6",
            runs: vec![sym("thm-unsumodd", 6, 0), sym("cor-epsplit-even", 6, 0), sym("cor-epsplit-odd", 6, 0)],
            limit: secs(120),
        },
    ]
}

fn describe(r: &CheckReport) -> String {
    let mut s = format!("{} {}", r.id, r.status);
    if let Some(w) = &r.witness {
        s.push_str(&format!(" at {}: {} vs {}", w.at, w.lhs, w.rhs));
    }
    if let Some(reason) = &r.reason {
        s.push_str(&format!(" ({reason})"));
    }
    s
}

fn main() -> ExitCode {
    let mut failed = 0;
    for (k, c) in criteria().into_iter().enumerate() {
        let start = Instant::now();
        let mut problems = Vec::new();
        for run in c.runs {
            let spec = match find(run.id) {
                Ok(s) => s,
                Err(e) => {
                    problems.push(format!("{}: {e}", run.id));
                    continue;
                }
            };
            let params = CheckParams { nmax: run.nmax, order: run.order, q: run.q, perturb_gamma: None };
            let report = run_check(spec, params);
            if report.status != Status::Pass {
                problems.push(describe(&report));
            }
        }
        let took = start.elapsed();
        if took > c.limit {
            problems.push(format!("took {:.1} s, limit {} s", took.as_secs_f64(), c.limit.as_secs()));
        }
        let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2}: {verdict} {} [{:.2} s]", k + 1, c.label, took.as_secs_f64());
        for p in &problems {
            println!("    {p}");
        }
        if !problems.is_empty() {
            failed += 1;
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
