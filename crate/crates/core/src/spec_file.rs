//! Group arguments: either a catalog name or a JSON group document.
//!
//! A document has either a `cayley` key (array of rows) or `degree` plus
//! `generators`. Each generator is a list of 1-based cycles such as
//! `[[1, 2, 3], [4, 5]]`, or a single cycle such as `[1, 2, 3, 4, 5]`.

use std::path::Path;

use serde::Deserialize;

use crate::catalog::GroupSpec;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::perm::Permutation;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupDocument {
    #[serde(default)]
    cayley: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    degree: Option<usize>,
    #[serde(default)]
    generators: Option<Vec<GeneratorForm>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum GeneratorForm {
    Cycles(Vec<Vec<usize>>),
    Cycle(Vec<usize>),
}

/// A group argument after resolution.
#[derive(Clone, Debug)]
pub struct ResolvedGroup {
    /// What the user typed.
    pub label: String,
    /// Stable identity for caching: the canonical catalog name, or the
    /// document text.
    pub canonical: String,
    pub group: FiniteGroup,
}

pub fn parse_group_document(text: &str) -> Result<FiniteGroup> {
    let doc: GroupDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let top = |message: &str| Error::Parse {
        line: 1,
        column: 1,
        message: message.to_string(),
    };
    match doc {
        GroupDocument {
            cayley: Some(rows),
            degree: None,
            generators: None,
        } => FiniteGroup::from_cayley_table(&rows),
        GroupDocument {
            cayley: None,
            degree: Some(degree),
            generators,
        } => {
            let gens = generators
                .unwrap_or_default()
                .into_iter()
                .map(|g| match g {
                    GeneratorForm::Cycles(cycles) => Permutation::from_cycles(degree, &cycles),
                    GeneratorForm::Cycle(c) => Permutation::from_cycles(degree, &[c]),
                })
                .collect::<Result<Vec<_>>>()?;
            FiniteGroup::from_permutations(degree, &gens)
        }
        GroupDocument {
            cayley: Some(_), ..
        } => Err(top(
            "`cayley` cannot be combined with `degree`/`generators`",
        )),
        _ => Err(top("expected `cayley` or `degree` with `generators`")),
    }
}

/// Resolves a command-line group argument: an existing file is read as a
/// group document, anything else must be a catalog name.
pub fn parse_group_spec(arg: &str) -> Result<ResolvedGroup> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            column: 0,
            message: format!("{}: {e}", path.display()),
        })?;
        let group = parse_group_document(&text)?;
        return Ok(ResolvedGroup {
            label: arg.to_string(),
            canonical: format!("document:{}", text.trim()),
            group,
        });
    }
    let spec: GroupSpec = arg.parse()?;
    Ok(ResolvedGroup {
        label: arg.to_string(),
        canonical: spec.to_string(),
        group: spec.build()?,
    })
}
