//! Acceptance criteria. Prints one line per criterion and exits non-zero if
//! any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use closurelab::{run_suite, SuiteOptions};

struct Criterion {
    id: &'static str,
    title: &'static str,
    suites: &'static [&'static str],
    allow_long: bool,
    limit: Duration,
}

const fn mins(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

const CRITERIA: [Criterion; 9] = [
    Criterion {
        id: "1",
        title: "alternating closure numbers",
        suites: &["an-closure"],
        allow_long: false,
        limit: mins(5),
    },
    Criterion {
        id: "1+",
        title: "k_trans(A7) = 6 (stretch)",
        suites: &["an-closure"],
        allow_long: true,
        limit: mins(30),
    },
    Criterion {
        id: "2",
        title: "A_n^(n-2) = S_n for n = 5, 6, 7",
        suites: &["intro-identity"],
        allow_long: false,
        limit: mins(2),
    },
    Criterion {
        id: "3",
        title: "subset-action base sizes",
        suites: &["halasi-bases"],
        allow_long: false,
        limit: mins(1),
    },
    Criterion {
        id: "4",
        title: "partition-action base sizes",
        suites: &["partition-bases"],
        allow_long: false,
        limit: mins(2),
    },
    Criterion {
        id: "5",
        title: "PSL base sizes",
        suites: &["psl-bases"],
        allow_long: false,
        limit: mins(2),
    },
    Criterion {
        id: "6",
        title: "Mathieu closures (M11, M23)",
        suites: &["mathieu-complete"],
        allow_long: true,
        limit: mins(70),
    },
    Criterion {
        id: "7",
        title: "b(M24) = 7",
        suites: &["m24-base"],
        allow_long: true,
        limit: mins(30),
    },
    Criterion {
        id: "8",
        title: "property suites",
        suites: &[
            "eq1-monotone",
            "base-closure",
            "oracle-equivalence",
            "block-lemma",
            "induced-restriction",
            "reduction-lemma",
            "intransitive-certificate",
        ],
        allow_long: false,
        limit: mins(15),
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let opts = SuiteOptions { allow_long: c.allow_long, ..SuiteOptions::default() };
        let start = Instant::now();
        let mut claims = 0;
        let mut problems = Vec::new();
        for s in c.suites {
            match run_suite(s, &opts) {
                Ok(r) => {
                    claims += r.claims.len();
                    for cl in r.claims.iter().filter(|cl| !cl.pass) {
                        problems.push(format!("{s}/{}: computed {}, expected {}", cl.id, cl.computed, cl.expected));
                    }
                }
                Err(e) => problems.push(format!("{s}: {e}")),
            }
        }
        let elapsed = start.elapsed();
        if elapsed > c.limit {
            problems.push(format!("took {elapsed:.1?}, limit {:?}", c.limit));
        }
        let verdict = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:<2} {verdict} {} ({claims} claims, {:.2}s)", c.id, c.title, elapsed.as_secs_f64());
        for p in &problems {
            println!("    {p}");
        }
        if !problems.is_empty() {
            failed += 1;
        }
    }
    println!("criterion 9  EXCLUDED general bounds for all classical and sporadic groups are out of reach at this scale");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
