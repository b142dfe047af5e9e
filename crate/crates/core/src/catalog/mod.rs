//! Named groups: symmetric, alternating, cyclic and dihedral families, the
//! Mathieu groups from shipped generator files, and `PSL(n, q)` on
//! projective points.

pub mod field;
pub mod projective;

use num_bigint::BigUint;
use num_traits::One;
use sha2::{Digest, Sha256};

use crate::actions::ActionInstance;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::stabchain::PermGroup;
use crate::tuples::TupleCanonizer;

pub use field::FiniteField;
pub use projective::{standard_base_psl, psl_order, psl_projective, ProjectivePoints};

fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

fn cycle(n: usize, points: impl Iterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = points.collect();
    Permutation::from_cycles(n, &[&pts]).expect("valid cycle")
}

pub fn symmetric(n: usize) -> PermGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, 0..2));
    }
    if n >= 3 {
        gens.push(cycle(n, 0..n));
    }
    PermGroup::new(n, gens).unwrap().with_known_order(factorial(n))
}

pub fn alternating(n: usize) -> PermGroup {
    let mut gens = Vec::new();
    if n >= 3 {
        gens.push(cycle(n, 0..3));
    }
    if n >= 4 {
        gens.push(if n % 2 == 1 { cycle(n, 0..n) } else { cycle(n, 1..n) });
    }
    let order = if n >= 2 { factorial(n) / 2u32 } else { BigUint::one() };
    PermGroup::new(n, gens).unwrap().with_known_order(order)
}

pub fn cyclic(n: usize) -> PermGroup {
    let gens = if n >= 2 { vec![cycle(n, 0..n)] } else { Vec::new() };
    PermGroup::new(n, gens).unwrap().with_known_order(BigUint::from(n.max(1)))
}

/// The symmetries of a regular `n`-gon, `n ≥ 3`, of order `2n`.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("dihedral group needs n ≥ 3, got {n}")));
    }
    let reflection = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
    Ok(PermGroup::new(n, vec![cycle(n, 0..n), reflection])?.with_known_order(BigUint::from(2 * n)))
}

/// Parses a generator file: a `degree N` line, one generator per line in
/// cycle notation, and an optional `checksum sha256:HEX` line covering the
/// generator lines joined by newlines. Blank lines and `#` comments are
/// skipped.
pub fn parse_group_file(text: &str) -> Result<PermGroup> {
    let mut degree = None;
    let mut lines: Vec<&str> = Vec::new();
    let mut checksum = None;
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("degree") {
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::Validation(format!("bad degree line: {line}")))?;
            degree = Some(n);
        } else if let Some(rest) = line.strip_prefix("checksum") {
            checksum = Some(rest.trim().to_string());
        } else {
            if degree.is_none() {
                return Err(Error::Validation("generator before the degree line".into()));
            }
            lines.push(line);
        }
    }
    let degree = degree.ok_or_else(|| Error::Validation("missing degree line".into()))?;
    if let Some(sum) = checksum {
        let hex = sum
            .strip_prefix("sha256:")
            .ok_or_else(|| Error::Validation(format!("unknown checksum kind: {sum}")))?;
        let digest = Sha256::digest(lines.join("\n").as_bytes());
        if format!("{digest:x}") != hex.to_ascii_lowercase() {
            return Err(Error::Validation("checksum mismatch".into()));
        }
    }
    let gens = lines
        .iter()
        .map(|l| Permutation::parse_cycles(l, degree))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(degree, gens)
}

/// Shipped data and the properties each Mathieu group is checked against.
struct MathieuData {
    name: &'static str,
    text: &'static str,
    order: u64,
    transitivity: usize,
}

const MATHIEU: [MathieuData; 5] = [
    MathieuData { name: "M11", text: include_str!("../../data/m11.txt"), order: 7920, transitivity: 4 },
    MathieuData { name: "M12", text: include_str!("../../data/m12.txt"), order: 95040, transitivity: 5 },
    MathieuData { name: "M22", text: include_str!("../../data/m22.txt"), order: 443520, transitivity: 3 },
    MathieuData { name: "M23", text: include_str!("../../data/m23.txt"), order: 10200960, transitivity: 4 },
    MathieuData { name: "M24", text: include_str!("../../data/m24.txt"), order: 244823040, transitivity: 5 },
];

/// Checks a generator file against an expected order and exact
/// transitivity degree.
pub fn validate_group(name: &str, group: &PermGroup, order: u64, transitivity: usize) -> Result<()> {
    let got = group.order();
    if got != BigUint::from(order) {
        return Err(Error::Validation(format!("{name}: order {got}, expected {order}")));
    }
    let t = TupleCanonizer::new(group).transitivity_degree(transitivity + 1);
    if t != transitivity {
        return Err(Error::Validation(format!(
            "{name}: {t}-transitive, expected exactly {transitivity}-transitive"
        )));
    }
    Ok(())
}

/// The natural action of `M11`, `M12`, `M22`, `M23` or `M24`, validated
/// before it is returned.
pub fn mathieu(name: &str) -> Result<ActionInstance> {
    let data = MATHIEU
        .iter()
        .find(|d| d.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::InvalidArgument(format!("unknown Mathieu group {name}")))?;
    let group = parse_group_file(data.text)?;
    validate_group(data.name, &group, data.order, data.transitivity)?;
    Ok(ActionInstance::natural(data.name, group))
}

/// Names accepted by [`by_name`], as patterns.
pub const NAMES: [&str; 9] = ["An", "Sn", "Cn", "D2n", "M11", "M12", "M22", "M23", "M24"];

/// The natural action of a catalog group: `A5`, `S6`, `C6`, `D8` (order 8),
/// `M11`, …, or `PSL(3,2)` on projective points.
pub fn by_name(name: &str) -> Result<ActionInstance> {
    let name = name.trim();
    let bad = || Error::InvalidArgument(format!("unknown catalog group {name}"));
    if let Some(inner) = name
        .strip_prefix("PSL(")
        .or_else(|| name.strip_prefix("psl("))
        .and_then(|r| r.strip_suffix(')'))
    {
        let (n, q) = inner.split_once(',').ok_or_else(bad)?;
        let n = n.trim().parse().map_err(|_| bad())?;
        let q = q.trim().parse().map_err(|_| bad())?;
        return psl_projective(n, q, false);
    }
    if name.len() >= 2 && name[..1].eq_ignore_ascii_case("M") && name[1..].chars().all(|c| c.is_ascii_digit()) {
        return mathieu(name);
    }
    let (head, tail) = name.split_at(1.min(name.len()));
    let k: usize = tail.parse().map_err(|_| bad())?;
    let group = match head {
        "A" | "a" => alternating(k),
        "S" | "s" => symmetric(k),
        "C" | "c" => cyclic(k),
        "D" | "d" if k.is_multiple_of(2) => dihedral(k / 2)?,
        _ => return Err(bad()),
    };
    Ok(ActionInstance::natural(name.to_uppercase(), group))
}
