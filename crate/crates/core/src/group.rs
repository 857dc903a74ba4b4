//! Finite groups given by multiplication tables.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown group {0:?} (expected Z<n>, S3, Q8, Z2xZ2 or trivial)")]
    UnknownName(String),
}

/// A finite group on elements `0..order`, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Checks closure, associativity, identity and inverses.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotAGroup(format!("row {i} has length {}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(GroupError::NotAGroup(format!("entry {bad} out of range in row {i}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| GroupError::NotAGroup("no identity element".into()))?;
        let inverses = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| GroupError::NotAGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroup {
            name: name.into(),
            table,
            identity,
            inverses,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(format!("Z{n}"), table).expect("cyclic group")
    }

    /// The symmetric group on three letters, elements ordered lexicographically
    /// as permutations with the identity first.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| index([p[q[0]], p[q[1]], p[q[2]]]))
                    .collect()
            })
            .collect();
        Self::from_table("S3", table).expect("S3")
    }

    /// Quaternion group: element `2*u + s` is `(-1)^s * [1, i, j, k][u]`.
    pub fn quaternion8() -> Self {
        // unit products: (sign, unit)
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let table = (0..8)
            .map(|a| {
                (0..8)
                    .map(|b| {
                        let (ua, sa) = (a / 2, a % 2);
                        let (ub, sb) = (b / 2, b % 2);
                        let (s, u) = UNIT[ua][ub];
                        2 * u + (s + sa + sb) % 2
                    })
                    .collect()
            })
            .collect();
        Self::from_table("Q8", table).expect("Q8")
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order(), b.order());
        let table = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                    .collect()
            })
            .collect();
        Self::from_table(format!("{}x{}", a.name, b.name), table).expect("direct product")
    }

    /// Looks up a shipped group by name: `Z<n>`, `S3`, `Q8`, `Z2xZ2`, `trivial`.
    pub fn by_name(name: &str) -> Result<Self, GroupError> {
        match name {
            "S3" => return Ok(Self::symmetric3()),
            "Q8" => return Ok(Self::quaternion8()),
            "trivial" => return Ok(Self::cyclic(1)),
            _ => {}
        }
        if let Some((a, b)) = name.split_once('x') {
            return Ok(Self::direct_product(&Self::by_name(a)?, &Self::by_name(b)?));
        }
        match name.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if (1..=64).contains(&n) => Ok(Self::cyclic(n)),
            _ => Err(GroupError::UnknownName(name.to_string())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Parses `group <name> order <k>` followed by `k` rows of the table.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines.next().ok_or(GroupError::Parse {
            line: 1,
            msg: "empty file".into(),
        })?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        let (name, order) = match toks.as_slice() {
            ["group", name, "order", k] => (
                name.to_string(),
                k.parse::<usize>().map_err(|_| GroupError::Parse {
                    line: hl,
                    msg: format!("bad order {k:?}"),
                })?,
            ),
            _ => {
                return Err(GroupError::Parse {
                    line: hl,
                    msg: "expected `group <name> order <k>`".into(),
                })
            }
        };
        let mut table = Vec::with_capacity(order);
        for (ln, line) in lines {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| GroupError::Parse {
                    line: ln,
                    msg: "table entries must be element indices".into(),
                })?;
            if row.len() != order {
                return Err(GroupError::Parse {
                    line: ln,
                    msg: format!("expected {order} entries, found {}", row.len()),
                });
            }
            table.push(row);
        }
        if table.len() != order {
            return Err(GroupError::Parse {
                line: hl,
                msg: format!("expected {order} table rows, found {}", table.len()),
            });
        }
        Self::from_table(name, table)
    }
}

impl fmt::Display for FiniteGroup {
    /// Serializes in the format accepted by [`FiniteGroup::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group {} order {}", self.name, self.order())?;
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_groups_validate() {
        for name in ["Z1", "Z2", "Z7", "S3", "Q8", "Z2xZ2", "trivial"] {
            let g = FiniteGroup::by_name(name).unwrap();
            assert!(g.order() >= 1);
        }
        assert!(!FiniteGroup::symmetric3().is_abelian());
        assert!(!FiniteGroup::quaternion8().is_abelian());
        assert!(FiniteGroup::by_name("Z2xZ2").unwrap().is_abelian());
    }

    #[test]
    fn quaternion_relations() {
        let q = FiniteGroup::quaternion8();
        let (i, j, k, minus_one) = (2, 4, 6, 1);
        assert_eq!(q.mul(i, i), minus_one);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), k + 1);
        assert_eq!(q.mul(q.mul(i, j), k), minus_one);
    }

    #[test]
    fn rejects_non_groups() {
        let t = vec![vec![0, 0], vec![0, 1]];
        assert!(matches!(FiniteGroup::from_table("bad", t), Err(GroupError::NotAGroup(_))));
        assert!(FiniteGroup::by_name("G7").is_err());
    }

    #[test]
    fn text_round_trip() {
        let g = FiniteGroup::symmetric3();
        assert_eq!(FiniteGroup::parse(&g.to_string()).unwrap(), g);
        assert!(FiniteGroup::parse("group Z2 order 2\n0 1\n").is_err());
    }
}
