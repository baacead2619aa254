//! GroupSpec files: `{"name": …, "degree": …, "generators": [[…], …]}` with
//! 0-based image arrays.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CatalogError;
use crate::permgrp::{FiniteGroup, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

impl GroupSpec {
    pub fn from_group(group: &FiniteGroup) -> Self {
        Self {
            name: group.name().to_string(),
            degree: group.degree(),
            generators: group
                .generator_perms()
                .iter()
                .map(|p| p.images().to_vec())
                .collect(),
        }
    }

    /// Checks every generator is a bijection of the stated degree.
    pub fn permutations(&self) -> Result<Vec<Permutation>, CatalogError> {
        self.generators
            .iter()
            .enumerate()
            .map(|(index, images)| {
                if images.len() != self.degree {
                    return Err(CatalogError::Validation {
                        index,
                        reason: format!(
                            "has {} images, expected degree {}",
                            images.len(),
                            self.degree
                        ),
                    });
                }
                Permutation::from_images(images.clone()).map_err(|e| CatalogError::Validation {
                    index,
                    reason: e.to_string(),
                })
            })
            .collect()
    }

    pub fn build(&self, max_order: usize) -> Result<FiniteGroup, CatalogError> {
        let gens = self.permutations()?;
        Ok(FiniteGroup::from_generators(self.degree, &gens, max_order)?.with_name(&self.name))
    }

    /// Canonical text: fields in the order name, degree, generators, one
    /// generator per line, trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!(
            "  \"name\": {},\n",
            serde_json::to_string(&self.name).expect("string serializes")
        ));
        out.push_str(&format!("  \"degree\": {},\n", self.degree));
        if self.generators.is_empty() {
            out.push_str("  \"generators\": []\n");
        } else {
            out.push_str("  \"generators\": [\n");
            for (i, g) in self.generators.iter().enumerate() {
                let sep = if i + 1 == self.generators.len() { "" } else { "," };
                out.push_str(&format!(
                    "    {}{sep}\n",
                    serde_json::to_string(g).expect("array serializes")
                ));
            }
            out.push_str("  ]\n");
        }
        out.push_str("}\n");
        out
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, CatalogError> {
    serde_json::from_str(text).map_err(|e| CatalogError::Malformed {
        line: e.line(),
        column: e.column(),
        reason: e.to_string(),
    })
}

pub fn load_group_spec(path: impl AsRef<Path>, max_order: usize) -> Result<FiniteGroup, CatalogError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| CatalogError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_group_spec(&text)?.build(max_order)
}

pub fn save_group_spec(group: &FiniteGroup, path: impl AsRef<Path>) -> Result<(), CatalogError> {
    let path = path.as_ref();
    fs::write(path, GroupSpec::from_group(group).to_canonical_string()).map_err(|e| {
        CatalogError::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        }
    })
}
