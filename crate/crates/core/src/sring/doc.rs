use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Result, SRing};
use crate::group::{ElementSet, Group, GroupDoc};

/// A group embedded as a full document or referred to by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Doc(GroupDoc),
    Name(String),
}

/// `{ "group"?, "basic_sets", "central", "rank" }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SRingDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupRef>,
    pub basic_sets: Vec<Vec<usize>>,
    #[serde(default)]
    pub central: bool,
    #[serde(default)]
    pub rank: usize,
}

impl SRingDoc {
    pub fn from_sring(a: &SRing, group: Option<GroupRef>) -> Self {
        SRingDoc {
            group,
            basic_sets: a.basic_sets().iter().map(|s| s.as_slice().to_vec()).collect(),
            central: a.is_central(),
            rank: a.rank(),
        }
    }

    /// Validates the stored partition over `group`. The `central` and
    /// `rank` fields are recomputed, not trusted.
    pub fn to_sring(&self, group: &Arc<Group>) -> Result<SRing> {
        let parts = self.basic_sets.iter().map(|s| ElementSet::new(s.iter().copied())).collect();
        SRing::from_partition(group, parts)
    }
}

/// `{ "group", "count", "srings", "ranks" }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub group: GroupRef,
    pub count: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub srings: Vec<SRingDoc>,
    pub ranks: Vec<usize>,
}

impl EnumerationReport {
    pub fn new(group: GroupRef, rings: &[SRing], full_dump: bool) -> Self {
        EnumerationReport {
            group,
            count: rings.len(),
            srings: if full_dump {
                rings.iter().map(|a| SRingDoc::from_sring(a, None)).collect()
            } else {
                Vec::new()
            },
            ranks: rings.iter().map(SRing::rank).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_symmetric;

    #[test]
    fn sring_document_round_trip() {
        let g = Arc::new(build_symmetric(3).unwrap());
        let a = SRing::class_algebra(&g);
        let doc = SRingDoc::from_sring(&a, Some(GroupRef::Name("S3".into())));
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(text, r#"{"group":"S3","basic_sets":[[0],[3,4],[1,2,5]],"central":true,"rank":3}"#);
        let back: SRingDoc = serde_json::from_str(&text).unwrap();
        assert!(back.to_sring(&g).unwrap().same_partition(&a));
        let bare: SRingDoc = serde_json::from_str(r#"{"basic_sets":[[0],[1,2,3,4,5]]}"#).unwrap();
        assert_eq!(bare.to_sring(&g).unwrap().rank(), 2);
    }
}
