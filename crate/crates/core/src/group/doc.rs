use serde::{Deserialize, Serialize};

use super::{Group, GroupError, Result, DEFAULT_SIZE_CAP};

/// JSON form of a group: `{ "order", "table", "names"?, "family"? }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

impl GroupDoc {
    pub fn from_group(g: &Group) -> Self {
        GroupDoc {
            order: g.order(),
            table: g.table(),
            names: g.names().map(<[String]>::to_vec),
            family: g.family().map(str::to_string),
        }
    }

    pub fn into_group(self) -> Result<Group> {
        self.into_group_capped(DEFAULT_SIZE_CAP)
    }

    pub fn into_group_capped(self, cap: usize) -> Result<Group> {
        if self.table.len() != self.order {
            return Err(GroupError::BadShape(format!(
                "order {} but {} table rows",
                self.order,
                self.table.len()
            )));
        }
        if self.order > cap {
            return Err(GroupError::SizeCapExceeded { order: self.order, cap });
        }
        Group::from_table(self.table, self.names, self.family)
    }
}

impl Group {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GroupDoc::from_group(self)).expect("group document serializes")
    }

    pub fn from_json(text: &str) -> Result<Group> {
        let doc: GroupDoc =
            serde_json::from_str(text).map_err(|e| GroupError::Parse(e.to_string()))?;
        doc.into_group()
    }
}
