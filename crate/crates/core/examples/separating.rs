//! Basic sets separated by a subgroup, over every central S-ring of a group.
//!
//!     cargo run --example separating

use std::sync::Arc;

use schurring::corpus::group_by_name;
use schurring::sring::{enumerate_central_srings, EnumerationLimits};
use schurring::verifiers::{separating_subgroup_survey, Witness};

fn main() {
    for name in ["Z6", "D8", "Q8", "S4", "Dic12"] {
        let g = Arc::new(group_by_name(name, 512).unwrap());
        let rings = enumerate_central_srings(&g, &EnumerationLimits::default()).unwrap();
        for a in &rings {
            let d = separating_subgroup_survey(a);
            let flagged = d.witnesses.iter().filter(|w| matches!(w, Witness::Subgroup { label, .. } if label.starts_with("flagged"))).count();
            println!("{name} rank {}: {:?}, {} flagged, {:?}", a.rank(), d.verdict, flagged, d.notes);
        }
    }
}
