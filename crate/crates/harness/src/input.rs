//! Group and action selection from command-line arguments.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use closurelab_core::actions::{coset_action, ksubsets_action, partitions_action};
use closurelab_core::catalog::{by_name, parse_group_file};
use closurelab_core::{ActionInstance, Provenance};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionSpec {
    Natural,
    Ksubsets(usize),
    /// Parts of size `a`, `b` of them.
    Partitions(usize, usize),
    Cosets(PathBuf),
    Projective,
}

impl FromStr for ActionSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("unrecognised action '{s}'; expected natural, ksubsets:K, partitions:AxB, cosets:FILE or projective");
        match s {
            "natural" => return Ok(ActionSpec::Natural),
            "projective" => return Ok(ActionSpec::Projective),
            _ => {}
        }
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "ksubsets" => arg.parse().map(ActionSpec::Ksubsets).map_err(|_| bad()),
            "partitions" => {
                let (a, b) = arg.split_once(['x', 'X']).ok_or_else(bad)?;
                Ok(ActionSpec::Partitions(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?))
            }
            "cosets" if !arg.is_empty() => Ok(ActionSpec::Cosets(PathBuf::from(arg))),
            _ => Err(bad()),
        }
    }
}

fn read_group(path: &Path) -> Result<closurelab_core::PermGroup, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_group_file(&text)?)
}

/// The group named by `--catalog` or read from `--group-file`, acting
/// naturally.
pub fn load_group(catalog: Option<&str>, file: Option<&Path>) -> Result<ActionInstance, CliError> {
    match (catalog, file) {
        (Some(name), None) => Ok(by_name(name)?),
        (None, Some(path)) => {
            let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "G".into());
            Ok(ActionInstance::natural(name, read_group(path)?))
        }
        (None, None) => Err(CliError::Usage("a group is required: pass --catalog NAME or --group-file PATH".into())),
        (Some(_), Some(_)) => Err(CliError::Usage("--catalog and --group-file are exclusive".into())),
    }
}

pub fn apply_action(base: &ActionInstance, spec: &ActionSpec) -> Result<ActionInstance, CliError> {
    Ok(match spec {
        ActionSpec::Natural => base.clone(),
        ActionSpec::Ksubsets(k) => ksubsets_action(base, *k)?,
        ActionSpec::Partitions(a, b) => partitions_action(base, *a, *b)?,
        ActionSpec::Cosets(path) => coset_action(&base.name, &base.group, &read_group(path)?)?,
        ActionSpec::Projective => {
            if !matches!(base.provenance, Provenance::Projective { .. }) {
                return Err(CliError::Usage(format!("{} has no projective action; use --catalog 'PSL(n,q)'", base.name)));
            }
            base.clone()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        assert_eq!("natural".parse(), Ok(ActionSpec::Natural));
        assert_eq!("ksubsets:3".parse(), Ok(ActionSpec::Ksubsets(3)));
        assert_eq!("partitions:2x3".parse(), Ok(ActionSpec::Partitions(2, 3)));
        assert_eq!("cosets:h.txt".parse(), Ok(ActionSpec::Cosets("h.txt".into())));
        assert!("ksubsets:x".parse::<ActionSpec>().is_err());
        assert!("orbit".parse::<ActionSpec>().is_err());
        assert!("cosets:".parse::<ActionSpec>().is_err());
    }

    #[test]
    fn projective_needs_psl() {
        let a5 = load_group(Some("A5"), None).unwrap();
        assert!(apply_action(&a5, &ActionSpec::Projective).is_err());
        let psl = load_group(Some("PSL(3,2)"), None).unwrap();
        assert_eq!(apply_action(&psl, &ActionSpec::Projective).unwrap().degree(), 7);
    }
}
