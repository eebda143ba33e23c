//! Groupoid and bigroupoid presentations: objects (0-cells), arrows
//! (1-cells) with source and target, and a partial composition table.

use std::collections::HashMap;

use super::{cell_algebra, ConstructError, LoopTable};
use crate::linear::Field;
use crate::structure::Whq;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Objects, 1-cells, identities and a composition table with
/// `composition[g][f] = Some(g∘f)` exactly when `s(g) = t(f)`.
/// Construction checks shapes, endpoints and normality of the identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellTable {
    objects: Vec<String>,
    cells: Vec<Cell>,
    identities: Vec<usize>,
    composition: Vec<Vec<Option<usize>>>,
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, ConstructError> {
    Err(ConstructError::InvalidPresentation(msg.into()))
}

fn index_of(names: &[String], kind: &str) -> Result<HashMap<String, usize>, ConstructError> {
    let mut map = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if map.insert(n.clone(), i).is_some() {
            return invalid(format!("duplicate {kind} name {n:?}"));
        }
    }
    Ok(map)
}

fn lookup(map: &HashMap<String, usize>, name: &str, kind: &str) -> Result<usize, ConstructError> {
    match map.get(name) {
        Some(&i) => Ok(i),
        None => invalid(format!("unknown {kind} {name:?}")),
    }
}

impl CellTable {
    /// Builds a table from names. `cells` are `(name, source, target)`,
    /// `identities` pair each object with its identity cell and `composites`
    /// are `(g, f, g∘f)`.
    pub fn from_names(
        objects: &[&str],
        cells: &[(&str, &str, &str)],
        identities: &[(&str, &str)],
        composites: &[(&str, &str, &str)],
    ) -> Result<CellTable, ConstructError> {
        let objects: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        let obj = index_of(&objects, "object")?;
        let mut cell_list = Vec::with_capacity(cells.len());
        for (name, s, t) in cells {
            cell_list.push(Cell {
                name: name.to_string(),
                source: lookup(&obj, s, "object")?,
                target: lookup(&obj, t, "object")?,
            });
        }
        let names: Vec<String> = cell_list.iter().map(|c| c.name.clone()).collect();
        let cell = index_of(&names, "1-cell")?;
        let mut ids = vec![None; objects.len()];
        for (x, f) in identities {
            let (x, f) = (lookup(&obj, x, "object")?, lookup(&cell, f, "1-cell")?);
            if ids[x].replace(f).is_some() {
                return invalid(format!("object {:?} has two identities", objects[x]));
            }
        }
        let mut identity_list = Vec::with_capacity(objects.len());
        for (x, id) in ids.into_iter().enumerate() {
            match id {
                Some(f) => identity_list.push(f),
                None => return invalid(format!("object {:?} has no identity", objects[x])),
            }
        }
        let n = cell_list.len();
        let mut composition = vec![vec![None; n]; n];
        for (g, f, h) in composites {
            let (g, f, h) = (lookup(&cell, g, "1-cell")?, lookup(&cell, f, "1-cell")?, lookup(&cell, h, "1-cell")?);
            if composition[g][f].replace(h).is_some() {
                return invalid(format!("composite {} ∘ {} given twice", names[g], names[f]));
            }
        }
        CellTable::new(objects, cell_list, identity_list, composition)
    }

    pub fn new(
        objects: Vec<String>,
        cells: Vec<Cell>,
        identities: Vec<usize>,
        composition: Vec<Vec<Option<usize>>>,
    ) -> Result<CellTable, ConstructError> {
        let n = cells.len();
        if objects.is_empty() || n == 0 {
            return invalid("no objects or no 1-cells");
        }
        if identities.len() != objects.len() {
            return invalid("one identity per object is required");
        }
        for c in &cells {
            if c.source >= objects.len() || c.target >= objects.len() {
                return invalid(format!("1-cell {:?} has an endpoint out of range", c.name));
            }
        }
        for (x, &i) in identities.iter().enumerate() {
            if i >= n || cells[i].source != x || cells[i].target != x {
                return invalid(format!("identity of {:?} is not a loop at it", objects[x]));
            }
        }
        if composition.len() != n || composition.iter().any(|r| r.len() != n) {
            return invalid("composition table has the wrong shape");
        }
        let t = CellTable { objects, cells, identities, composition };
        for g in 0..n {
            for f in 0..n {
                let (gn, fnm) = (&t.cells[g].name, &t.cells[f].name);
                match (t.composable(g, f), t.composition[g][f]) {
                    (true, None) => return invalid(format!("composite {gn} ∘ {fnm} is missing")),
                    (false, Some(_)) => return invalid(format!("{gn} ∘ {fnm} is given but not composable")),
                    (true, Some(h)) => {
                        if h >= n || t.cells[h].source != t.cells[f].source || t.cells[h].target != t.cells[g].target {
                            return invalid(format!("composite {gn} ∘ {fnm} has the wrong endpoints"));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for f in 0..n {
            let (s, tg) = (t.identities[t.cells[f].source], t.identities[t.cells[f].target]);
            if t.composition[tg][f] != Some(f) || t.composition[f][s] != Some(f) {
                return invalid(format!("identities do not act trivially on {:?}", t.cells[f].name));
            }
        }
        Ok(t)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn name(&self, f: usize) -> &str {
        &self.cells[f].name
    }

    pub fn composable(&self, g: usize, f: usize) -> bool {
        self.cells[g].source == self.cells[f].target
    }

    /// `g∘f`, if composable.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.composition[g][f]
    }

    pub fn cell_index(&self, name: &str) -> Option<usize> {
        self.cells.iter().position(|c| c.name == name)
    }

    /// `g` reverses the endpoints of `f`.
    fn reverses(&self, f: usize, g: usize) -> bool {
        self.cells[g].source == self.cells[f].target && self.cells[g].target == self.cells[f].source
    }

    fn names(&self) -> Vec<String> {
        self.cells.iter().map(|c| c.name.clone()).collect()
    }

    /// Disjoint union; names of the second table must not clash with the first.
    fn union(&self, other: &CellTable) -> Result<CellTable, ConstructError> {
        let (n0, n) = (self.objects.len(), self.len());
        let mut objects = self.objects.clone();
        objects.extend(other.objects.iter().cloned());
        let mut cells = self.cells.clone();
        cells.extend(other.cells.iter().map(|c| Cell {
            name: c.name.clone(),
            source: c.source + n0,
            target: c.target + n0,
        }));
        let mut identities = self.identities.clone();
        identities.extend(other.identities.iter().map(|i| i + n));
        let total = n + other.len();
        let mut composition = vec![vec![None; total]; total];
        for g in 0..n {
            for f in 0..n {
                composition[g][f] = self.composition[g][f];
            }
        }
        for g in 0..other.len() {
            for f in 0..other.len() {
                composition[g + n][f + n] = other.composition[g][f].map(|h| h + n);
            }
        }
        index_of(&objects, "object")?;
        index_of(&cells.iter().map(|c| c.name.clone()).collect::<Vec<_>>(), "1-cell")?;
        CellTable::new(objects, cells, identities, composition)
    }
}

/// A finite groupoid: associative composition and exact inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidPresentation {
    table: CellTable,
    inverse: Vec<usize>,
}

impl GroupoidPresentation {
    pub fn new(table: CellTable, inverse: Vec<usize>) -> Result<GroupoidPresentation, ConstructError> {
        let n = table.len();
        let bad = |m: String| Err(ConstructError::NotGroupoid(m));
        if inverse.len() != n || inverse.iter().any(|&g| g >= n) {
            return bad("one inverse per arrow is required".into());
        }
        for h in 0..n {
            for g in 0..n {
                for f in 0..n {
                    if !(table.composable(h, g) && table.composable(g, f)) {
                        continue;
                    }
                    let hg_f = table.compose(table.compose(h, g).unwrap(), f);
                    let h_gf = table.compose(h, table.compose(g, f).unwrap());
                    if hg_f != h_gf {
                        return bad(format!(
                            "composition is not associative at ({}, {}, {})",
                            table.name(h),
                            table.name(g),
                            table.name(f)
                        ));
                    }
                }
            }
        }
        for (f, &g) in inverse.iter().enumerate() {
            let c = &table.cells[f];
            if !table.reverses(f, g)
                || table.compose(g, f) != Some(table.identities[c.source])
                || table.compose(f, g) != Some(table.identities[c.target])
            {
                return bad(format!("{:?} is not an inverse of {:?}", table.name(g), table.name(f)));
            }
        }
        Ok(GroupoidPresentation { table, inverse })
    }

    /// Like [`CellTable::from_names`], with `inverses` pairing each arrow with its inverse.
    pub fn from_names(
        objects: &[&str],
        arrows: &[(&str, &str, &str)],
        identities: &[(&str, &str)],
        composites: &[(&str, &str, &str)],
        inverses: &[(&str, &str)],
    ) -> Result<GroupoidPresentation, ConstructError> {
        let table = CellTable::from_names(objects, arrows, identities, composites)?;
        let inverse = resolve_inverses(&table, inverses)?;
        GroupoidPresentation::new(table, inverse)
    }

    /// A group as a one-object groupoid; arrow names are `prefix` followed by
    /// the element label.
    pub fn from_group(group: &LoopTable, prefix: &str) -> Result<GroupoidPresentation, ConstructError> {
        let (table, inverse) = one_object(group, prefix)?;
        GroupoidPresentation::new(table, inverse)
    }

    /// The pair groupoid on objects `x1, …, xn`: one arrow `xi>xj` from each
    /// object to each object; the loops `xi>xi` are the identities.
    pub fn pair(n: usize) -> Result<GroupoidPresentation, ConstructError> {
        if n == 0 {
            return invalid("the pair groupoid needs an object");
        }
        let objects: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        // arrow index s·n + t goes from s to t
        let cells: Vec<Cell> = (0..n * n)
            .map(|k| Cell { name: format!("{}>{}", objects[k / n], objects[k % n]), source: k / n, target: k % n })
            .collect();
        let identities = (0..n).map(|x| x * n + x).collect();
        let mut composition = vec![vec![None; n * n]; n * n];
        for (g, row) in composition.iter_mut().enumerate() {
            for (f, slot) in row.iter_mut().enumerate() {
                if g / n == f % n {
                    *slot = Some((f / n) * n + g % n);
                }
            }
        }
        let table = CellTable::new(objects, cells, identities, composition)?;
        let inverse = (0..n * n).map(|k| (k % n) * n + k / n).collect();
        GroupoidPresentation::new(table, inverse)
    }

    pub fn disjoint_union(
        a: &GroupoidPresentation,
        b: &GroupoidPresentation,
    ) -> Result<GroupoidPresentation, ConstructError> {
        let table = a.table.union(&b.table)?;
        let mut inverse = a.inverse.clone();
        inverse.extend(b.inverse.iter().map(|g| g + a.table.len()));
        GroupoidPresentation::new(table, inverse)
    }

    pub fn table(&self) -> &CellTable {
        &self.table
    }

    pub fn inverse(&self) -> &[usize] {
        &self.inverse
    }

    /// The groupoid algebra: `μ(g⊗f) = g∘f` or 0, `η = Σ_x 1_x`.
    pub fn build(&self, field: Field) -> Result<Whq, ConstructError> {
        let t = &self.table;
        cell_algebra(field, t.len(), |g, f| t.compose(g, f), &t.identities, &self.inverse, t.names())
    }
}

fn resolve_inverses(table: &CellTable, pairs: &[(&str, &str)]) -> Result<Vec<usize>, ConstructError> {
    let mut inverse = vec![None; table.len()];
    for (f, g) in pairs {
        let fi = table.cell_index(f).map_or_else(|| invalid(format!("unknown 1-cell {f:?}")), Ok)?;
        let gi = table.cell_index(g).map_or_else(|| invalid(format!("unknown 1-cell {g:?}")), Ok)?;
        if inverse[fi].replace(gi).is_some() {
            return invalid(format!("1-cell {f:?} has two designated inverses"));
        }
    }
    inverse
        .into_iter()
        .enumerate()
        .map(|(f, g)| g.map_or_else(|| invalid(format!("1-cell {:?} has no inverse", table.name(f))), Ok))
        .collect()
}

fn one_object(l: &LoopTable, prefix: &str) -> Result<(CellTable, Vec<usize>), ConstructError> {
    let n = l.order();
    let inverse = l.ip_inverses()?;
    let objects = vec![format!("{prefix}*")];
    let cells = l.labels().iter().map(|s| Cell { name: format!("{prefix}{s}"), source: 0, target: 0 }).collect();
    let composition = (0..n).map(|g| (0..n).map(|f| Some(l.mul(g, f))).collect()).collect();
    Ok((CellTable::new(objects, cells, vec![l.identity()], composition)?, inverse))
}

/// A finite normal bigroupoid presented by its 1-cell composition (not
/// necessarily associative), a designated inverse per 1-cell and optionally
/// further members of each `Inv(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigroupoidPresentation {
    table: CellTable,
    inverse: Vec<usize>,
    extra_inverses: Vec<Vec<usize>>,
}

impl BigroupoidPresentation {
    pub fn new(
        table: CellTable,
        inverse: Vec<usize>,
        extra_inverses: Vec<Vec<usize>>,
    ) -> Result<BigroupoidPresentation, ConstructError> {
        let n = table.len();
        if inverse.len() != n || extra_inverses.len() != n {
            return invalid("one inverse entry per 1-cell is required");
        }
        for f in 0..n {
            for &g in std::iter::once(&inverse[f]).chain(&extra_inverses[f]) {
                if g >= n {
                    return invalid(format!("inverse of {:?} out of range", table.name(f)));
                }
                if !table.reverses(f, g) {
                    return Err(ConstructError::InconsistentPresentation {
                        cell: table.name(f).to_string(),
                        reason: format!("{:?} does not run from t(f) to s(f)", table.name(g)),
                    });
                }
            }
        }
        Ok(BigroupoidPresentation { table, inverse, extra_inverses })
    }

    /// Like [`CellTable::from_names`]; `inverses` designates one inverse per
    /// 1-cell, `extra_inverses` lists further members of `Inv(f)`.
    pub fn from_names(
        objects: &[&str],
        cells: &[(&str, &str, &str)],
        identities: &[(&str, &str)],
        composites: &[(&str, &str, &str)],
        inverses: &[(&str, &str)],
        extra_inverses: &[(&str, &str)],
    ) -> Result<BigroupoidPresentation, ConstructError> {
        let table = CellTable::from_names(objects, cells, identities, composites)?;
        let inverse = resolve_inverses(&table, inverses)?;
        let mut extra = vec![Vec::new(); table.len()];
        for (f, g) in extra_inverses {
            let fi = table.cell_index(f).map_or_else(|| invalid(format!("unknown 1-cell {f:?}")), Ok)?;
            let gi = table.cell_index(g).map_or_else(|| invalid(format!("unknown 1-cell {g:?}")), Ok)?;
            extra[fi].push(gi);
        }
        BigroupoidPresentation::new(table, inverse, extra)
    }

    pub fn from_groupoid(g: &GroupoidPresentation) -> BigroupoidPresentation {
        let n = g.table.len();
        BigroupoidPresentation {
            table: g.table.clone(),
            inverse: g.inverse.clone(),
            extra_inverses: vec![Vec::new(); n],
        }
    }

    /// An IP loop as a one-object bigroupoid.
    pub fn from_loop(l: &LoopTable, prefix: &str) -> Result<BigroupoidPresentation, ConstructError> {
        let (table, inverse) = one_object(l, prefix)?;
        let n = table.len();
        BigroupoidPresentation::new(table, inverse, vec![Vec::new(); n])
    }

    /// `L × G` for an IP loop `L` and a groupoid `G`: 1-cells are pairs,
    /// composed componentwise. Nonassociative as soon as `L` is.
    pub fn loop_times_groupoid(
        l: &LoopTable,
        g: &GroupoidPresentation,
    ) -> Result<BigroupoidPresentation, ConstructError> {
        let inv_l = l.ip_inverses()?;
        let (gt, m) = (&g.table, l.order());
        let n = gt.len() * m;
        // cell index a·|G| + k pairs loop element a with arrow k
        let idx = |a: usize, k: usize| a * gt.len() + k;
        let cells = (0..n)
            .map(|i| {
                let (a, k) = (i / gt.len(), i % gt.len());
                Cell {
                    name: format!("{}.{}", l.labels()[a], gt.name(k)),
                    source: gt.cells[k].source,
                    target: gt.cells[k].target,
                }
            })
            .collect();
        let identities = gt.identities.iter().map(|&k| idx(l.identity(), k)).collect();
        let mut composition = vec![vec![None; n]; n];
        for (x, row) in composition.iter_mut().enumerate() {
            for (y, slot) in row.iter_mut().enumerate() {
                let (a, k) = (x / gt.len(), x % gt.len());
                let (b, j) = (y / gt.len(), y % gt.len());
                *slot = gt.compose(k, j).map(|kj| idx(l.mul(a, b), kj));
            }
        }
        let table = CellTable::new(gt.objects.clone(), cells, identities, composition)?;
        let inverse = (0..n).map(|i| idx(inv_l[i / gt.len()], g.inverse[i % gt.len()])).collect();
        BigroupoidPresentation::new(table, inverse, vec![Vec::new(); n])
    }

    /// Disjoint union of two presentations.
    pub fn disjoint_union(
        a: &BigroupoidPresentation,
        b: &BigroupoidPresentation,
    ) -> Result<BigroupoidPresentation, ConstructError> {
        let table = a.table.union(&b.table)?;
        let n = a.table.len();
        let mut inverse = a.inverse.clone();
        inverse.extend(b.inverse.iter().map(|g| g + n));
        let mut extra = a.extra_inverses.clone();
        extra.extend(b.extra_inverses.iter().map(|v| v.iter().map(|g| g + n).collect()));
        BigroupoidPresentation::new(table, inverse, extra)
    }

    pub fn table(&self) -> &CellTable {
        &self.table
    }

    pub fn inverse(&self) -> &[usize] {
        &self.inverse
    }

    pub fn extra_inverses(&self) -> &[Vec<usize>] {
        &self.extra_inverses
    }

    /// All of `Inv(f)` known to the presentation, designated inverse first.
    pub fn inverses_of(&self, f: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.inverse[f]).chain(self.extra_inverses[f].iter().copied())
    }

    /// Two objects `x, y` with two parallel arrows `f, f′: x → y` sharing
    /// the inverse `g`. Composition with `g` cannot tell `f` and `f′` apart,
    /// so the ideal identifies them and the quotient is the pair groupoid.
    pub fn doubled_arrow() -> BigroupoidPresentation {
        BigroupoidPresentation::from_names(
            &["x", "y"],
            &[("1x", "x", "x"), ("1y", "y", "y"), ("f", "x", "y"), ("f'", "x", "y"), ("g", "y", "x")],
            &[("x", "1x"), ("y", "1y")],
            &[
                ("1x", "1x", "1x"),
                ("1x", "g", "g"),
                ("g", "1y", "g"),
                ("g", "f", "1x"),
                ("g", "f'", "1x"),
                ("1y", "1y", "1y"),
                ("1y", "f", "f"),
                ("1y", "f'", "f'"),
                ("f", "1x", "f"),
                ("f'", "1x", "f'"),
                ("f", "g", "1y"),
                ("f'", "g", "1y"),
            ],
            &[("1x", "1x"), ("1y", "1y"), ("f", "g"), ("f'", "g"), ("g", "f")],
            &[("g", "f'")],
        )
        .expect("well-formed presentation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_groupoid_is_a_groupoid() {
        let g = GroupoidPresentation::pair(3).unwrap();
        assert_eq!(g.table().len(), 9);
        assert_eq!(g.table().name(1), "x1>x2");
        // (x2>x3) ∘ (x1>x2) = x1>x3
        assert_eq!(g.table().compose(5, 1), Some(2));
    }

    #[test]
    fn missing_composite_is_reported() {
        let err = CellTable::from_names(&["x"], &[("1", "x", "x")], &[("x", "1")], &[]).unwrap_err();
        assert!(matches!(err, ConstructError::InvalidPresentation(_)));
    }

    #[test]
    fn inverse_with_wrong_endpoints_is_inconsistent() {
        let err = BigroupoidPresentation::from_names(
            &["x", "y"],
            &[("1x", "x", "x"), ("1y", "y", "y"), ("f", "x", "y")],
            &[("x", "1x"), ("y", "1y")],
            &[("1x", "1x", "1x"), ("1y", "1y", "1y"), ("1y", "f", "f"), ("f", "1x", "f")],
            &[("1x", "1x"), ("1y", "1y"), ("f", "f")],
            &[],
        )
        .unwrap_err();
        assert!(matches!(err, ConstructError::InconsistentPresentation { .. }));
    }

    #[test]
    fn nonassociative_table_is_not_a_groupoid() {
        let b = BigroupoidPresentation::doubled_arrow();
        let err = GroupoidPresentation::new(b.table().clone(), b.inverse().to_vec()).unwrap_err();
        assert!(matches!(err, ConstructError::NotGroupoid(_)));
    }
}
