//! Named verification suites. Each claim pairs a computation with the
//! statement it checks and the value that statement predicts.

use std::time::Instant;

use closurelab_core::actions::{coset_action, ksubsets_action, partitions_action, quotient_action, restriction, union};
use closurelab_core::basesize::{exact_base_size, greedy_base, halasi_base, information_bound, partition_base_check};
use closurelab_core::blocks::{all_block_systems, maximal_block_systems};
use closurelab_core::catalog::{alternating, by_name, mathieu, standard_base_psl, psl_projective, symmetric, FiniteField};
use closurelab_core::closure::{
    closure_spectrum, complete_lemma_check, intransitive_certificate, k_closure, k_trans, AttestedFacts, ClosureError,
    IntransitiveVerdict, LemmaStatus,
};
use closurelab_core::oracle;
use closurelab_core::{ActionInstance, BlockSystem, Budget, Error, PermGroup, Permutation, Result};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Every registered suite, in the order `verify --suite all` runs them.
pub const SUITES: [&str; 14] = [
    "an-closure",
    "intro-identity",
    "halasi-bases",
    "partition-bases",
    "psl-bases",
    "mathieu-complete",
    "m24-base",
    "eq1-monotone",
    "base-closure",
    "oracle-equivalence",
    "block-lemma",
    "induced-restriction",
    "reduction-lemma",
    "intransitive-certificate",
];

const SEED: u64 = 0x5eed_c105;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub citation: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub claims: Vec<Claim>,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    /// Include the M23 closure and the exact M24 base.
    pub allow_long: bool,
    /// Record elapsed time per claim. Off keeps output byte-stable.
    pub timings: bool,
    pub budget: Budget,
}

struct Recorder {
    opts: SuiteOptions,
    claims: Vec<Claim>,
    started: Instant,
}

impl Recorder {
    fn new(opts: &SuiteOptions) -> Self {
        Recorder { opts: *opts, claims: Vec::new(), started: Instant::now() }
    }

    fn budget(&self) -> &Budget {
        &self.opts.budget
    }

    fn record(&mut self, id: impl Into<String>, citation: &str, expected: impl ToString, computed: impl ToString, pass: bool) {
        let elapsed_ms = self.opts.timings.then(|| self.started.elapsed().as_millis() as u64);
        self.claims.push(Claim {
            id: id.into(),
            citation: citation.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
            elapsed_ms,
        });
        self.started = Instant::now();
    }

    fn equal<T: ToString + PartialEq>(&mut self, id: impl Into<String>, citation: &str, expected: T, computed: T) {
        let pass = expected == computed;
        self.record(id, citation, expected, computed, pass);
    }
}

/// Runs one suite, or every suite when `name` is `all`.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteResult> {
    if name == "all" {
        let mut claims = Vec::new();
        for s in SUITES {
            let r = run_suite(s, opts)?;
            claims.extend(r.claims.into_iter().map(|mut c| {
                c.id = format!("{s}/{}", c.id);
                c
            }));
        }
        let pass = claims.iter().all(|c| c.pass);
        return Ok(SuiteResult { suite: "all".into(), claims, pass });
    }
    let mut r = Recorder::new(opts);
    match name {
        "an-closure" => an_closure(&mut r)?,
        "intro-identity" => intro_identity(&mut r)?,
        "halasi-bases" => halasi_bases(&mut r)?,
        "partition-bases" => partition_bases(&mut r)?,
        "psl-bases" => psl_bases(&mut r)?,
        "mathieu-complete" => mathieu_complete(&mut r)?,
        "m24-base" => m24_base(&mut r)?,
        "eq1-monotone" => eq1_monotone(&mut r)?,
        "base-closure" => base_closure(&mut r)?,
        "oracle-equivalence" => oracle_equivalence(&mut r)?,
        "block-lemma" => block_lemma(&mut r)?,
        "induced-restriction" => induced_restriction(&mut r)?,
        "reduction-lemma" => reduction_lemma(&mut r)?,
        "intransitive-certificate" => intransitive(&mut r)?,
        _ => return Err(Error::InvalidArgument(format!("unknown suite {name}"))),
    }
    if r.claims.is_empty() {
        return Err(Error::Validation(format!("suite {name} registered no claims")));
    }
    let pass = r.claims.iter().all(|c| c.pass);
    Ok(SuiteResult { suite: name.to_string(), claims: r.claims, pass })
}

fn closure_group(action: &ActionInstance, k: usize, budget: &Budget) -> Result<PermGroup> {
    k_closure(action, k, budget).map(|c| c.group).map_err(|e| match e {
        ClosureError::Failed(e) => e,
        other => Error::BudgetExceeded(other.to_string()),
    })
}

fn natural(name: &str) -> ActionInstance {
    by_name(name).expect("catalog name")
}

fn group(degree: usize, gens: &[&str]) -> PermGroup {
    PermGroup::from_cycles(degree, gens).expect("valid generators")
}

fn cosets(name: &str, parent: PermGroup, sub: &[&str]) -> Result<ActionInstance> {
    let h = group(parent.degree(), sub);
    coset_action(name, &parent, &h)
}

fn list<T: ToString>(xs: &[T]) -> String {
    let s: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", s.join(","))
}

/// The actions the property suites range over. All are faithful and of
/// degree at most 30.
pub fn property_catalog() -> Result<Vec<ActionInstance>> {
    let mut out = Vec::new();
    for name in [
        "S3", "S4", "S5", "S6", "A4", "A5", "A6", "A7", "C5", "C6", "C8", "D8", "D10", "D12", "PSL(3,2)", "PSL(2,7)",
        "PSL(2,8)", "PSL(2,9)", "PSL(3,3)", "PSL(4,2)", "M11", "M12",
    ] {
        out.push(by_name(name)?);
    }
    out.push(ActionInstance::natural("S2wrS3", group(6, &["(1 2)", "(1 3 5)(2 4 6)", "(1 3)(2 4)"])));
    out.push(ActionInstance::natural("S3wrS2", group(6, &["(1 2 3)", "(1 2)", "(1 4)(2 5)(3 6)"])));
    out.push(ActionInstance::natural("S2wrS4", group(8, &["(1 2)", "(1 3)(2 4)", "(1 3 5 7)(2 4 6 8)"])));
    out.push(ksubsets_action(&natural("S5"), 2)?);
    out.push(ksubsets_action(&natural("A5"), 2)?);
    out.push(ksubsets_action(&natural("A6"), 2)?);
    out.push(ksubsets_action(&natural("S6"), 3)?);
    out.push(partitions_action(&natural("S6"), 2, 3)?);
    out.push(partitions_action(&natural("A6"), 3, 2)?);
    out.push(cosets("A4", alternating(4), &["(1 2)(3 4)"])?);
    out.push(cosets("S4", symmetric(4), &["(1 2 3 4)"])?);
    out.push(cosets("A5", alternating(5), &["(1 2 3 4 5)"])?);
    out.push(cosets("A5", alternating(5), &["(1 2 3)"])?);
    out.push(cosets("A5", alternating(5), &["(1 2)(3 4)"])?);
    Ok(out)
}

/// The union actions used by the restriction and intransitive suites.
pub fn union_catalog() -> Result<Vec<ActionInstance>> {
    let a5 = natural("A5");
    let s4 = natural("S4");
    let d10 = cosets("A5", alternating(5), &["(1 2 3 4 5)", "(2 5)(3 4)"])?;
    Ok(vec![
        union(&[a5.clone(), a5.clone()])?,
        union(&[a5.clone(), ksubsets_action(&a5, 2)?])?,
        union(&[a5, d10])?,
        union(&[s4.clone(), partitions_action(&s4, 2, 2)?])?,
    ])
}

fn an_closure(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "k(A_n) = n - 1";
    let a5 = closure_spectrum(&natural("A5"), None, r.budget())?;
    let orders: Vec<String> = a5.entries.iter().map(|e| e.order.to_string()).collect();
    r.equal("a5-spectrum", CITE, "[120,120,120,60]".to_string(), list(&orders));
    r.equal_opt("a5-minimal-k", CITE, Some(4), a5.minimal_k);
    let a6 = closure_spectrum(&natural("A6"), None, r.budget())?;
    let orders: Vec<String> = a6.entries.iter().map(|e| e.order.to_string()).collect();
    r.equal("a6-spectrum", CITE, "[720,720,720,720,360]".to_string(), list(&orders));
    r.equal_opt("a6-minimal-k", CITE, Some(5), a6.minimal_k);
    let mut cases = vec![("a5-ktrans", alternating(5), 12, 4), ("a6-ktrans", alternating(6), 15, 5)];
    if r.opts.allow_long {
        cases.push(("a7-ktrans", alternating(7), 21, 6));
    }
    for (id, g, bound, k) in cases {
        let t = k_trans(&g, bound, r.budget())?;
        r.equal(id, CITE, format!("k={k} certified"), format!("k={} {}", t.k, certified(t.certified)));
    }
    Ok(())
}

fn certified(c: bool) -> &'static str {
    if c {
        "certified"
    } else {
        "upper bound only"
    }
}

impl<T: std::fmt::Display> ToStringOpt for Option<T> {
    fn to_string_opt(&self) -> String {
        match self {
            Some(v) => v.to_string(),
            None => "none".into(),
        }
    }
}

trait ToStringOpt {
    fn to_string_opt(&self) -> String;
}

impl Recorder {
    fn equal_opt<T: std::fmt::Display + PartialEq>(&mut self, id: &str, citation: &str, expected: Option<T>, computed: Option<T>) {
        let pass = expected == computed;
        self.record(id, citation, expected.to_string_opt(), computed.to_string_opt(), pass);
    }
}

fn intro_identity(r: &mut Recorder) -> Result<()> {
    for n in [5, 6, 7] {
        let a = natural(&format!("A{n}"));
        let c = closure_group(&a, n - 2, r.budget())?;
        let sym = symmetric(n);
        let equal = c.order() == sym.order() && c.contains_group(&sym)?;
        r.record(
            format!("a{n}-closure-{}", n - 2),
            "G^(n-2) = Sym(n) for G = A_n on n points",
            format!("Sym({n}) of order {}", sym.order()),
            format!("order {}", c.order()),
            equal,
        );
    }
    Ok(())
}

fn halasi_bases(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "base sizes of S_n and A_n on k-subsets";
    let cases = [("S5", 2, 3), ("A5", 2, 2), ("S6", 2, 4), ("A6", 2, 3), ("S6", 3, 3)];
    for (g, k, b) in cases {
        let a = ksubsets_action(&natural(g), k)?;
        let rec = exact_base_size(&a, r.budget(), 1)?;
        r.equal(
            format!("{}-{k}-subsets", g.to_lowercase()),
            CITE,
            format!("b={b} exhaustive"),
            format!("b={} {}", rec.size, if rec.exhaustive { "exhaustive" } else { "not exhaustive" }),
        );
    }
    for n in 5..=9 {
        let h = halasi_base(n)?;
        let m = n / 3;
        let size = if n % 3 == 2 { 2 * m + 1 } else { 2 * m };
        r.record(
            format!("pairs-n{n}"),
            "explicit 2-subset base for S_n",
            format!("{size} pairs, trivial stabilizer"),
            format!("{} pairs, {} stabilizer", h.size, if h.stabilizer_trivial { "trivial" } else { "nontrivial" }),
            h.size == size && h.stabilizer_trivial,
        );
    }
    Ok(())
}

fn partition_bases(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "b <= n - 2 on uniform partitions, equality only for S_6";
    let cases = [("S6", 2, 3, 4), ("A6", 2, 3, 3), ("S6", 3, 2, 4), ("A6", 3, 2, 3), ("S8", 2, 4, 3)];
    for (g, a, b, size) in cases {
        let act = partitions_action(&natural(g), a, b)?;
        let rec = exact_base_size(&act, r.budget(), 1)?;
        r.equal(
            format!("{}-{a}x{b}", g.to_lowercase()),
            CITE,
            format!("b={size} exhaustive"),
            format!("b={} {}", rec.size, if rec.exhaustive { "exhaustive" } else { "not exhaustive" }),
        );
    }
    for (n, a, b) in [(6, 2, 3), (6, 3, 2), (8, 2, 4), (8, 4, 2)] {
        let c = partition_base_check(n, a, b, r.budget())?;
        r.record(
            format!("equality-{a}x{b}"),
            CITE,
            format!("equality {}", if c.equality_expected { "holds" } else { "fails" }),
            format!("S{n}: {}, A{n}: {}, n-2 = {}", c.symmetric, c.alternating, c.bound),
            c.consistent,
        );
    }
    Ok(())
}

fn psl_bases(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "b = n + 1 - delta_{2q} for PSL(n,q) on points";
    for (n, q) in [(2, 5), (3, 2), (3, 3), (4, 2)] {
        let a = psl_projective(n, q, true)?;
        let expected = n + 1 - usize::from(q == 2);
        let rec = exact_base_size(&a, r.budget(), 1)?;
        r.equal(
            format!("psl-{n}-{q}"),
            CITE,
            format!("b={expected} exhaustive"),
            format!("b={} {}", rec.size, if rec.exhaustive { "exhaustive" } else { "not exhaustive" }),
        );
        let witness = standard_base_psl(n, q)?;
        let trivial = a.group.pointwise_stabilizer(&witness)?.is_trivial();
        r.record(
            format!("psl-{n}-{q}-witness"),
            CITE,
            format!("{expected} points, trivial stabilizer"),
            format!("{} points, {} stabilizer", witness.len(), if trivial { "trivial" } else { "nontrivial" }),
            trivial && witness.len() == expected,
        );
    }
    for q in [2, 3, 4, 5, 7, 8, 9, 11, 13] {
        let ok = FiniteField::new(q).and_then(|f| f.verify_axioms()).is_ok();
        r.record(format!("field-{q}"), "GF(q) is a field", "axioms hold", if ok { "axioms hold" } else { "axioms fail" }, ok);
    }
    Ok(())
}

fn mathieu_complete(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "k-transitive, not (k+1)-transitive, maximal in Alt, Out = 1 implies G^(k+1) = G != G^(k)";
    let facts = AttestedFacts { out_trivial: true, maximal_in_alt: true };
    let mut cases = vec![("m11", "M11", 7920u64)];
    if r.opts.allow_long {
        cases.push(("m23", "M23", 10200960));
    }
    for (id, name, order) in cases {
        let rep = complete_lemma_check(&mathieu(name)?, 4, facts, r.budget())?;
        r.record(
            format!("{id}-upper"),
            CITE,
            format!("|G^(5)| = {order}"),
            format!("|G^(5)| = {}", rep.upper_order.as_deref().unwrap_or("not computed")),
            rep.upper_order.as_deref() == Some(&order.to_string()[..]),
        );
        r.record(
            format!("{id}-lemma"),
            CITE,
            "confirmed with a non-member of G in G^(4)",
            format!("{:?}, witness {}", rep.status, rep.witness.as_deref().unwrap_or("none")),
            rep.status == LemmaStatus::Confirmed && rep.witness.is_some(),
        );
    }
    let guard = complete_lemma_check(&natural("A5"), 3, AttestedFacts::default(), r.budget())?;
    r.equal(
        "a5-guard",
        "the lemma needs G maximal in Alt",
        format!("{:?}", LemmaStatus::HypothesesNotApplicable),
        format!("{:?}", guard.status),
    );
    Ok(())
}

fn m24_base(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "b <= 7 with equality only for M24 on 24 points";
    let m24 = mathieu("M24")?;
    r.equal("m24-order", "|M24| = 244823040", "244823040".to_string(), m24.order().to_string());
    let greedy = greedy_base(&m24)?;
    r.record("m24-greedy", CITE, "greedy base of size >= 7", format!("size {}", greedy.size), greedy.size >= 7);
    if r.opts.allow_long {
        let rec = exact_base_size(&m24, r.budget(), 1)?;
        r.equal(
            "m24-exact",
            CITE,
            "b=7 exhaustive".to_string(),
            format!("b={} {}", rec.size, if rec.exhaustive { "exhaustive" } else { "not exhaustive" }),
        );
    }
    Ok(())
}

/// A product of random generators and inverses.
fn random_element(g: &PermGroup, rng: &mut ChaCha8Rng) -> Permutation {
    let gens = g.chain().strong_generators();
    let mut x = Permutation::identity(g.degree());
    if gens.is_empty() {
        return x;
    }
    for _ in 0..24 {
        let s = &gens[rng.gen_range(0..gens.len())];
        let s = if rng.gen_bool(0.5) { s.clone() } else { s.inverse() };
        x = &x * &s;
    }
    x
}

fn eq1_monotone(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "G <= G^(k) <= G^(k-1)";
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for a in property_catalog()? {
        let order = a.order();
        let mut chain: Vec<PermGroup> = Vec::new();
        let mut ok = true;
        let mut fixpoint = None;
        for k in 1..=a.degree() + 1 {
            let c = closure_group(&a, k, r.budget())?;
            ok &= c.contains_group(&a.group)?;
            if let Some(prev) = chain.last() {
                ok &= prev.contains_group(&c)? && c.order() <= prev.order();
                for _ in 0..8 {
                    ok &= prev.contains(&random_element(&c, &mut rng))?;
                }
            }
            let done = c.order() == order;
            chain.push(c);
            if fixpoint.is_some() {
                ok &= done;
                break;
            }
            if done {
                fixpoint = Some(k);
            }
        }
        let orders: Vec<BigUint> = chain.iter().map(|c| c.order()).collect();
        r.record(
            a.describe(),
            CITE,
            format!("non-increasing to {order}, stable after"),
            format!("orders {}", list(&orders)),
            ok && fixpoint.is_some(),
        );
    }
    Ok(())
}

fn base_closure(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "G^(b+1) = G";
    for a in property_catalog()? {
        let rec = exact_base_size(&a, r.budget(), 1)?;
        let greedy = greedy_base(&a)?;
        let info = information_bound(&a.group);
        let witness_ok = a.group.pointwise_stabilizer(&rec.witness)?.is_trivial();
        let c = closure_group(&a, rec.size + 1, r.budget())?;
        let ok = witness_ok && rec.exhaustive && greedy.size >= rec.size && rec.size >= info && c.order() == a.order();
        r.record(
            a.describe(),
            CITE,
            format!("|G^(b+1)| = {}", a.order()),
            format!("b={} (greedy {}, bound {}), |G^({})| = {}", rec.size, greedy.size, info, rec.size + 1, c.order()),
            ok,
        );
    }
    Ok(())
}

fn oracle_equivalence(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "k-closure equals the Sym filtration";
    let mut actions = property_catalog()?;
    actions.retain(|a| a.degree() <= oracle::MAX_DEGREE);
    for a in actions {
        let mut orders = Vec::new();
        let mut ok = true;
        for k in 1..=4 {
            let c = closure_group(&a, k, r.budget())?;
            let filtered = oracle::closure_by_filtration(a.degree(), a.group.generators(), k)?;
            ok &= c.order() == BigUint::from(filtered.len());
            for h in &filtered {
                ok &= c.contains(h)?;
            }
            orders.push(filtered.len());
        }
        r.record(a.describe(), CITE, format!("filtration orders {}", list(&orders)), format!("search agrees: {ok}"), ok);
    }
    Ok(())
}

/// The setwise stabilizer of block `b` as a group on the original points.
fn block_stabilizer(g: &PermGroup, sys: &BlockSystem, b: usize) -> Result<PermGroup> {
    let n = g.degree();
    let m = sys.num_blocks();
    let gens = g
        .generators()
        .iter()
        .map(|x| {
            let mut images = x.images().to_vec();
            images.extend((0..m).map(|j| n + sys.block_of(x.apply(sys.blocks()[j][0]))));
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let stab = PermGroup::new(n + m, gens)?.pointwise_stabilizer(&[n + b])?;
    let gens = stab
        .generators()
        .iter()
        .map(|x| Permutation::from_images(x.images()[..n].to_vec()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(n, gens)
}

fn block_restriction(g: &PermGroup, sys: &BlockSystem, b: usize) -> Result<ActionInstance> {
    let stab = block_stabilizer(g, sys, b)?;
    restriction(&ActionInstance::natural("stabilizer", stab), &sys.blocks()[b])
}

fn block_lemma(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "closures preserve blocks, and lie over the quotient and block closures";
    let mut tested = 0;
    for a in property_catalog()? {
        if !a.is_transitive() {
            continue;
        }
        let systems: Vec<BlockSystem> = all_block_systems(&a)?
            .into_iter()
            .filter(|s| !s.is_singletons() && !s.is_universal())
            .collect();
        if systems.is_empty() {
            continue;
        }
        tested += 1;
        for (si, sys) in systems.into_iter().enumerate() {
            let quotient = quotient_action(&a, &sys)?;
            let d_ready = if quotient.is_faithful() { exact_base_size(&quotient, r.budget(), 1)?.size } else { usize::MAX };
            let g_block = block_restriction(&a.group, &sys, 0)?;
            let mut ok = [true; 4];
            let mut d_applied = Vec::new();
            let mut settled = false;
            for k in 2..=sys.num_blocks() {
                let c = if settled { a.group.clone() } else { closure_group(&a, k, r.budget())? };
                settled = c.order() == a.order();
                if !sys.is_invariant(c.generators()) {
                    ok[0] = false;
                    continue;
                }
                let c_action = ActionInstance::natural("closure", c.clone());
                let c_quot = quotient_action(&c_action, &sys)?;
                ok[1] &= closure_group(&quotient, k, r.budget())?.contains_group(&c_quot.group)?;
                let c_block = block_restriction(&c, &sys, 0)?;
                ok[2] &= closure_group(&g_block, k, r.budget())?.contains_group(&c_block.group)?;
                if d_ready <= k {
                    d_applied.push(k);
                    ok[3] &= c_quot.group.order() == c.order();
                }
            }
            let parts: Vec<String> = ["a", "b", "c", "d"]
                .iter()
                .zip(ok)
                .map(|(p, v)| format!("{p}:{}", if v { "ok" } else { "fail" }))
                .collect();
            r.record(
                format!("{} / system {si}: {} blocks of {}", a.describe(), sys.num_blocks(), sys.block_size()),
                CITE,
                "parts a-d hold",
                format!("{} (d applied at k={})", parts.join(" "), list(&d_applied)),
                ok.iter().all(|&v| v),
            );
        }
    }
    r.record("imprimitive-count", CITE, "at least 5 imprimitive actions", format!("{tested} imprimitive actions"), tested >= 5);
    Ok(())
}

fn induced_restriction(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "(G^(k))^D <= (G^D)^(k) on an invariant subset D";
    let unions = union_catalog()?;
    for u in &unions {
        let mut ok = true;
        for k in 2..=4 {
            let c = ActionInstance::natural("closure", closure_group(u, k, r.budget())?);
            for orbit in u.orbits() {
                let restricted = restriction(&c, &orbit)?;
                let local = closure_group(&restriction(u, &orbit)?, k, r.budget())?;
                ok &= local.contains_group(&restricted.group)?;
            }
        }
        r.record(u.describe(), CITE, "contained for k = 2..4", format!("contained: {ok}"), ok);
    }
    r.record("union-count", CITE, "at least 3 unions", format!("{} unions", unions.len()), unions.len() >= 3);
    Ok(())
}

fn reduction_lemma(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "b(G on points) <= b(G on a faithful block quotient)";
    for a in property_catalog()? {
        if !a.is_transitive() {
            continue;
        }
        let b = exact_base_size(&a, r.budget(), 1)?.size;
        let mut quotients = Vec::new();
        for sys in maximal_block_systems(&a)? {
            let q = quotient_action(&a, &sys)?;
            if q.is_faithful() {
                quotients.push(exact_base_size(&q, r.budget(), 1)?.size);
            }
        }
        let ok = quotients.iter().all(|&bq| b <= bq);
        r.record(a.describe(), CITE, format!("b={b} <= each quotient"), format!("quotients {}", list(&quotients)), ok);
    }
    Ok(())
}

fn intransitive(r: &mut Recorder) -> Result<()> {
    const CITE: &str = "point stabilizers intransitive on other orbits and G^(k) = G on each orbit imply G^(k) = G";
    let unions = union_catalog()?;
    let expected = [
        IntransitiveVerdict::Certified,
        IntransitiveVerdict::Certified,
        IntransitiveVerdict::HypothesisFails { from: 0, to: 1 },
    ];
    for (u, want) in unions.iter().zip(expected) {
        let rep = intransitive_certificate(u, 4, r.budget())?;
        let direct = closure_group(u, 4, r.budget())?.order();
        let agrees = match rep.verdict {
            IntransitiveVerdict::Certified => direct == u.order(),
            _ => rep.direct_order.as_deref() == Some(&direct.to_string()[..]),
        };
        r.record(
            u.describe(),
            CITE,
            format!("{want:?}"),
            format!("{:?}, direct search order {direct}", rep.verdict),
            rep.verdict == want && agrees,
        );
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteOptions::default()).is_err());
    }

    #[test]
    fn round_trip() {
        let r = run_suite("intro-identity", &SuiteOptions::default()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: SuiteResult = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(r.pass);
    }

    #[test]
    fn claim_ids_are_unique() {
        let r = run_suite("all", &SuiteOptions::default()).unwrap();
        let mut ids: Vec<&str> = r.claims.iter().map(|c| c.id.as_str()).collect();
        let n = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn catalog_is_faithful() {
        for a in property_catalog().unwrap().iter().chain(&union_catalog().unwrap()) {
            assert!(a.is_faithful(), "{}", a.describe());
            assert!(a.degree() <= 30);
        }
    }
}
