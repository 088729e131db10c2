//! Permutations in disjoint-cycle notation and closure of generator sets.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::{Group, GroupError, Result};

/// A permutation of `0..degree`, stored as its image list.
///
/// Products act left to right: `(a * b)(i) = b(a(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn extended(&self, degree: usize) -> Self {
        let mut v = self.0.clone();
        v.extend(self.0.len()..degree);
        Permutation(v)
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn is_even(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for start in 0..n {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 0
    }

    /// Parses one permutation such as `"(1 2 3)(4 5)"` (points are 1-based;
    /// commas inside a cycle are accepted as separators).
    pub fn parse(text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| GroupError::Parse(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| GroupError::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                let k: usize = tok
                    .parse()
                    .map_err(|_| GroupError::Parse(format!("bad point {tok:?}")))?;
                if k == 0 {
                    return Err(GroupError::Parse("points are numbered from 1".into()));
                }
                if cycle.contains(&(k - 1)) {
                    return Err(GroupError::Parse(format!("point {k} repeated in a cycle")));
                }
                cycle.push(k - 1);
            }
            cycles.push(cycle);
            rest = open[close + 1..].trim_start();
        }
        let degree = cycles.iter().flatten().map(|&k| k + 1).max().unwrap_or(0);
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        for cycle in &cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if moved[a] {
                    return Err(GroupError::Parse(format!("cycles of {text:?} are not disjoint")));
                }
                moved[a] = true;
                images[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation(images))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.0[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Splits a generator list such as `"(1 2 3 4 5),(1 2 3)"` into permutations.
/// Generators are separated by `,` or `;` outside parentheses.
pub fn parse_generators(text: &str) -> Result<Vec<Permutation>> {
    let mut gens = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(GroupError::Parse(format!("unbalanced ')' in {text:?}")));
                }
                current.push(ch);
            }
            ',' | ';' if depth == 0 => {
                if !current.trim().is_empty() {
                    gens.push(Permutation::parse(&current)?);
                }
                current.clear();
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(GroupError::Parse(format!("unbalanced '(' in {text:?}")));
    }
    if !current.trim().is_empty() {
        gens.push(Permutation::parse(&current)?);
    }
    Ok(gens)
}

/// Closes `gens` under products (breadth first from the identity) and
/// returns the resulting group. Element order is the discovery order.
pub fn from_permutation_generators(gens: &[Permutation], cap: usize) -> Result<Group> {
    let degree = gens.iter().map(Permutation::degree).max().unwrap_or(0);
    let gens: Vec<Permutation> = gens.iter().map(|g| g.extended(degree)).collect();
    let id = Permutation::identity(degree);
    let mut index: HashMap<Permutation, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elements = vec![id];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let h = elements[i].then(g);
            if !index.contains_key(&h) {
                if elements.len() >= cap {
                    return Err(GroupError::SizeCapExceeded { order: elements.len() + 1, cap });
                }
                index.insert(h.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(h);
            }
        }
    }
    table_from_elements(elements, &index, "perm".to_string())
}

/// Builds a group from a full, closed list of permutations (identity first).
pub(super) fn group_from_permutations(perms: Vec<Permutation>, family: String) -> Result<Group> {
    let index: HashMap<Permutation, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    table_from_elements(perms, &index, family)
}

fn table_from_elements(
    elements: Vec<Permutation>,
    index: &HashMap<Permutation, usize>,
    family: String,
) -> Result<Group> {
    let n = elements.len();
    let mut mult = Vec::with_capacity(n * n);
    for a in &elements {
        for b in &elements {
            let ab = a.then(b);
            let k = *index
                .get(&ab)
                .ok_or_else(|| GroupError::InvalidArgument("permutation set is not closed".into()))?;
            mult.push(k);
        }
    }
    let names = elements.iter().map(|p| p.to_string()).collect();
    Group::from_flat(n, mult, Some(names), Some(family))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Permutation::parse("(1 2 3)(4 5)").unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert!(!p.is_even());
        assert_eq!(Permutation::parse("(1,2)").unwrap().images(), &[1, 0]);
        assert!(Permutation::parse("(1 2)(2 3)").is_err());
        assert!(Permutation::parse("(0 1)").is_err());
        assert_eq!(Permutation::parse("()").unwrap().degree(), 0);
    }

    #[test]
    fn generator_lists() {
        let gens = parse_generators("(1 2 3 4 5),(1 2 3)").unwrap();
        assert_eq!(gens.len(), 2);
        let gens = parse_generators("(1,2,3)(4,5); (1 2)").unwrap();
        assert_eq!(gens.len(), 2);
        assert!(parse_generators("(1 2").is_err());
    }

    #[test]
    fn closures() {
        let a5 = from_permutation_generators(&parse_generators("(1 2 3 4 5),(1 2 3)").unwrap(), 512)
            .unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(from_permutation_generators(&[], 512).unwrap().order(), 1);
        let z2 = from_permutation_generators(&parse_generators("(1 2)").unwrap(), 512).unwrap();
        assert_eq!(z2.order(), 2);
        let s5 = parse_generators("(1 2 3 4 5),(1 2)").unwrap();
        assert!(matches!(
            from_permutation_generators(&s5, 100),
            Err(GroupError::SizeCapExceeded { .. })
        ));
    }
}
