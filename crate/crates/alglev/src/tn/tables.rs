//! Emission of the three low-level tables of the variety: nilpotent,
//! solvable non-nilpotent, and nonsolvable structures grouped by level.
//!
//! Family rows are printed with symbolic parameters a, b, c, ...; the
//! parameter domains are K-sets read off the partition shape. A sampling
//! mode instantiates the parameters at given rationals.

use super::{build_t, level_t, recognize_t, TnPoint};
use crate::exact::{int, ExactMatrix, Ring, Scalar};
use crate::partitions::Partition;
use crate::spectra::{block_diag, chain_matrix};
use std::fmt::Write as _;

type RatMatrix = ExactMatrix<Scalar>;

/// Symbolic coefficient in a table row.
#[derive(Clone, PartialEq, Eq, Debug)]
enum Coef {
    Num(Scalar),
    Sym(char),
    NegSym(char),
    OneMinusSym(char),
}

impl Coef {
    fn render(&self) -> String {
        match self {
            Coef::Num(x) => x.to_string(),
            Coef::Sym(c) => c.to_string(),
            Coef::NegSym(c) => format!("-{c}"),
            Coef::OneMinusSym(c) => format!("(1-{c})"),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Coef::Num(x) if Ring::is_zero(x))
    }

    fn is_one(&self) -> bool {
        matches!(self, Coef::Num(x) if x == &<Scalar as Ring>::one())
    }
}

/// One value position of a family: a symbol or a fixed literal.
#[derive(Clone, PartialEq, Eq, Debug)]
enum Value {
    Sym(char),
    Lit(Scalar),
}

/// Family row of one of the three tables at a fixed dimension.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub table: u8,
    pub level: u32,
    /// Table 1: the nilpotent Jordan type; tables 2 and 3: the partition
    /// sum carried by the family.
    pub partition: Partition,
    pub notation: String,
    pub alias: Option<&'static str>,
    pub constraint: String,
    pub params: Vec<char>,
    values: Vec<Value>,
}

fn param_letters(count: usize) -> Vec<char> {
    (0..count).map(|i| (b'a' + i as u8) as char).collect()
}

/// K-set group sizes for display: nonzero entries of
/// `(b_1 - b_2, b_2 - b_3, ..., b_len)` in chain (top-down) order.
fn kset_groups(b: &Partition) -> Vec<u32> {
    let len = b.len();
    let mut out = Vec::new();
    for i in 0..len {
        let d = b.part(i) - b.part(i + 1);
        if d > 0 {
            out.push(d);
        }
    }
    out
}

fn notation_for(r: u8, b: &Partition, values: &[Value]) -> String {
    let parts: Vec<String> = b
        .parts()
        .iter()
        .filter(|&&p| p > 1)
        .map(|p| p.to_string())
        .collect();
    let vals: Vec<String> = values
        .iter()
        .map(|v| match v {
            Value::Sym(c) => c.to_string(),
            Value::Lit(x) => x.to_string(),
        })
        .collect();
    let mut sup = parts.join(",");
    if !sup.is_empty() {
        sup.push(',');
    }
    format!("T_{}^{{{}({})}}", r, sup, vals.join(","))
}

impl TableRow {
    fn nilpotent(level: u32, a: Partition) -> TableRow {
        let parts: Vec<String> = a
            .parts()
            .iter()
            .filter(|&&p| p > 1)
            .map(|p| p.to_string())
            .collect();
        let notation = format!("T_0^{{{}}}", parts.join(","));
        let big: Vec<u32> = a.parts().iter().copied().filter(|&p| p > 1).collect();
        let alias = if big == [2] { Some("n3") } else { None };
        TableRow {
            table: 1,
            level,
            partition: a,
            notation,
            alias,
            constraint: String::new(),
            params: Vec::new(),
            values: Vec::new(),
        }
    }

    fn family(table: u8, level: u32, b: Partition) -> TableRow {
        let r = if table == 2 { 0 } else { 1 };
        let count = b.part(0) as usize;
        let groups = kset_groups(&b);
        let star = if r == 0 { "*" } else { "" };
        // The scaling quotient for r = 0 makes the all-ones family the
        // single literal tuple (1, ..., 1).
        let (values, params, constraint) = if r == 0 && b.part(0) == 1 {
            (
                vec![Value::Lit(int(1)); count],
                Vec::new(),
                String::new(),
            )
        } else {
            let letters = param_letters(count);
            let values = letters.iter().map(|&c| Value::Sym(c)).collect();
            let gs: Vec<String> = groups.iter().map(|g| g.to_string()).collect();
            let names: Vec<String> = letters.iter().map(|c| c.to_string()).collect();
            (
                values,
                letters.clone(),
                format!("({}) in K{}_{{{}}}", names.join(","), star, gs.join(",")),
            )
        };
        let alias = if b.part(0) == 1 {
            if r == 0 {
                Some("p-")
            } else {
                Some("nu^a")
            }
        } else {
            None
        };
        let notation = notation_for(r, &b, &values);
        TableRow {
            table,
            level,
            partition: b,
            notation,
            alias,
            constraint,
            params,
            values,
        }
    }

    fn r(&self) -> u8 {
        if self.table == 3 {
            1
        } else {
            0
        }
    }

    /// Products as (lhs-i, lhs-j, terms) with symbolic coefficients, in the
    /// scan order e1*e1, then per coordinate e1*ec / ec*e1.
    fn products(&self) -> Vec<(usize, usize, Vec<(Coef, usize)>)> {
        let n = self.partition.total() as usize + 1;
        let mut out = Vec::new();
        if self.table == 3 {
            out.push((1, 1, vec![(Coef::Num(int(1)), 1)]));
        }
        // Walk the display blocks: block j covers matrix positions of size
        // b_j, with diagonal values the last b_j display values.
        let b = &self.partition;
        let b1 = b.part(0) as usize;
        let mut coord = 2usize; // algebra coordinate of the block start
        for jdx in 0..b.len() {
            let size = b.part(jdx) as usize;
            for s in 0..size {
                let c = coord + s;
                let val: Coef = if self.table == 1 {
                    Coef::Num(int(0))
                } else {
                    match &self.values[b1 - size + s] {
                        Value::Sym(ch) => Coef::Sym(*ch),
                        Value::Lit(x) => Coef::Num(x.clone()),
                    }
                };
                let has_sub = s + 1 < size;
                let mut left = Vec::new();
                if !val.is_zero() {
                    left.push((val.clone(), c));
                }
                if has_sub {
                    left.push((Coef::Num(int(1)), c + 1));
                }
                if !left.is_empty() {
                    out.push((1, c, left));
                }
                let mut right = Vec::new();
                match self.r() {
                    0 => {
                        match &val {
                            Coef::Num(x) if Ring::is_zero(x) => {}
                            Coef::Num(x) => right.push((Coef::Num(-x), c)),
                            Coef::Sym(ch) => right.push((Coef::NegSym(*ch), c)),
                            _ => unreachable!(),
                        }
                        if has_sub {
                            right.push((Coef::Num(int(-1)), c + 1));
                        }
                    }
                    _ => {
                        match &val {
                            Coef::Num(x) => {
                                let w = <Scalar as Ring>::one() - x;
                                if !Ring::is_zero(&w) {
                                    right.push((Coef::Num(w), c));
                                }
                            }
                            Coef::Sym(ch) => right.push((Coef::OneMinusSym(*ch), c)),
                            _ => unreachable!(),
                        }
                        if has_sub {
                            right.push((Coef::Num(int(-1)), c + 1));
                        }
                    }
                }
                if !right.is_empty() {
                    out.push((c, 1, right));
                }
            }
            coord += size;
        }
        let _ = n;
        out
    }

    fn render_products(&self) -> String {
        let prods = self.products();
        let mut parts = Vec::new();
        for (i, j, terms) in prods {
            let rendered: Vec<String> = terms
                .iter()
                .map(|(c, idx)| {
                    if c.is_one() {
                        format!("e{idx}")
                    } else if c == &Coef::Num(int(-1)) {
                        format!("-e{idx}")
                    } else {
                        format!("{} e{idx}", c.render())
                    }
                })
                .collect();
            let mut rhs = rendered.join(" + ");
            rhs = rhs.replace("+ -", "- ");
            parts.push(format!("e{i}*e{j} = {rhs}"));
        }
        parts.join(", ")
    }

    /// Instantiates the family at concrete parameter values (cycled over
    /// the given pool); table-1 rows have no parameters.
    pub fn instantiate(&self, pool: &[Scalar]) -> TnPoint {
        let assign: Vec<Scalar> = (0..self.params.len())
            .map(|i| pool[i % pool.len()].clone())
            .collect();
        let values: Vec<Scalar> = self
            .values
            .iter()
            .map(|v| match v {
                Value::Lit(x) => x.clone(),
                Value::Sym(ch) => {
                    let slot = self.params.iter().position(|p| p == ch).unwrap();
                    assign[slot].clone()
                }
            })
            .collect();
        let m = self.display_matrix(&values);
        let structure = build_t(self.r(), &m);
        recognize_t(&structure).expect("table rows are T-structures")
    }

    /// The displayed block-diagonal chain matrix at concrete values (all
    /// zeros for table 1).
    fn display_matrix(&self, values: &[Scalar]) -> RatMatrix {
        let b = &self.partition;
        if self.table == 1 {
            let blocks: Vec<RatMatrix> = b
                .parts()
                .iter()
                .map(|&p| chain_matrix(&vec![Scalar::zero(); p as usize]))
                .collect();
            return block_diag(&blocks);
        }
        let b1 = b.part(0) as usize;
        let blocks: Vec<RatMatrix> = b
            .parts()
            .iter()
            .map(|&p| chain_matrix(&values[b1 - p as usize..]))
            .collect();
        block_diag(&blocks)
    }
}

/// All family rows of one table at dimension `n` up to `max_level`.
pub fn table_families(table: u8, n: usize, max_level: u32) -> Vec<TableRow> {
    assert!((1..=3).contains(&table));
    assert!(n >= 2);
    let d = (n - 1) as u32;
    let mut rows = Vec::new();
    for level in 1..=max_level {
        for a in Partition::enumerate(d) {
            if table == 1 {
                if a.level() == level {
                    rows.push(TableRow::nilpotent(level, a));
                }
            } else if a.level() + 1 == level {
                rows.push(TableRow::family(table, level, a));
            }
        }
    }
    rows
}

const TABLE_TITLES: [&str; 3] = [
    "nilpotent structures",
    "solvable non-nilpotent structures",
    "nonsolvable structures",
];

/// Renders one table; `machine` switches to line-oriented key=value
/// records, `sample` appends instantiated structures for family rows.
pub fn emit_tn_tables(table: u8, n: usize, max_level: u32, machine: bool, sample: Option<&[Scalar]>) -> String {
    let rows = table_families(table, n, max_level);
    let mut out = String::new();
    if !machine {
        let _ = writeln!(
            out,
            "Table {}. {} in T_n of levels 1..{}, n = {}",
            table,
            TABLE_TITLES[table as usize - 1],
            max_level,
            n
        );
    }
    for row in &rows {
        if machine {
            let _ = write!(
                out,
                "table={} n={} level={} partition={} notation={}",
                table,
                n,
                row.level,
                row.partition
                    .parts()
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                row.notation,
            );
            if let Some(alias) = row.alias {
                let _ = write!(out, " alias={alias}");
            }
            if !row.constraint.is_empty() {
                let _ = write!(out, " constraint={}", row.constraint.replace(' ', ""));
            }
            let _ = writeln!(out, " products={}", row.render_products().replace(", ", ";"));
        } else {
            let mut header = format!(
                "level {}: {} {}",
                row.level,
                if table == 1 { "partition" } else { "sum" },
                row.partition
            );
            let _ = write!(header, ", {}", row.notation);
            if let Some(alias) = row.alias {
                let _ = write!(header, " [{alias}]");
            }
            if !row.constraint.is_empty() {
                let _ = write!(header, ", {}", row.constraint);
            }
            let _ = writeln!(out, "{header}");
            let _ = writeln!(out, "  {}", row.render_products());
        }
        if let Some(pool) = sample {
            if !row.params.is_empty() {
                let point = row.instantiate(pool);
                let assign: Vec<String> = row
                    .params
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{}={}", c, pool[i % pool.len()]))
                    .collect();
                let _ = writeln!(
                    out,
                    "  sampled {}: {} level {}",
                    assign.join(","),
                    point,
                    level_t(&point)
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nilpotent_rows_at_small_dims() {
        // n = 5, level 2 nilpotent: exactly T_0^{2,2}.
        let rows = table_families(1, 5, 5);
        let lvl2: Vec<_> = rows.iter().filter(|r| r.level == 2).collect();
        assert_eq!(lvl2.len(), 1);
        assert_eq!(lvl2[0].notation, "T_0^{2,2}");
        // n = 4, level 2 nilpotent: exactly T_0^{3}.
        let rows = table_families(1, 4, 5);
        let lvl2: Vec<_> = rows.iter().filter(|r| r.level == 2).collect();
        assert_eq!(lvl2.len(), 1);
        assert_eq!(lvl2[0].notation, "T_0^{3}");
    }

    #[test]
    fn level_one_rows_at_n3() {
        let t1 = table_families(1, 3, 1);
        assert_eq!(t1.len(), 1);
        assert_eq!(t1[0].alias, Some("n3"));
        let t2 = table_families(2, 3, 1);
        assert_eq!(t2.len(), 1);
        assert_eq!(t2[0].alias, Some("p-"));
        assert_eq!(t2[0].render_products(), "e1*e2 = e2, e2*e1 = -e2, e1*e3 = e3, e3*e1 = -e3");
        let t3 = table_families(3, 3, 1);
        assert_eq!(t3.len(), 1);
        assert_eq!(t3[0].alias, Some("nu^a"));
    }

    #[test]
    fn family_row_products_match_paper_shape() {
        // Level-2 solvable row at n = 5: T_0^{2,(a,b)} with (a,b) in K*_{1,1}.
        let rows = table_families(2, 5, 2);
        let lvl2: Vec<_> = rows.iter().filter(|r| r.level == 2).collect();
        assert_eq!(lvl2.len(), 1);
        let row = lvl2[0];
        assert_eq!(row.constraint, "(a,b) in K*_{1,1}");
        assert_eq!(
            row.render_products(),
            "e1*e2 = a e2 + e3, e2*e1 = -a e2 - e3, e1*e3 = b e3, e3*e1 = -b e3, e1*e4 = b e4, e4*e1 = -b e4, e1*e5 = b e5, e5*e1 = -b e5"
        );
        // At n = 3 the same family has the symmetric constraint K*_{2}.
        let rows = table_families(2, 3, 2);
        let lvl2: Vec<_> = rows.iter().filter(|r| r.level == 2).collect();
        assert_eq!(lvl2[0].constraint, "(a,b) in K*_{2}");
    }

    #[test]
    fn sampled_rows_have_the_advertised_level() {
        // Distinct values, coincident values, and tuples containing zeros
        // all stay on the advertised level (for table 2 the tuple must not
        // vanish entirely, which these pools respect).
        let pools: [&[Scalar]; 3] = [
            &[int(1), int(2), int(3), int(5)],
            &[int(2), int(2), int(2), int(2)],
            &[int(0), int(1), int(0), int(2)],
        ];
        for pool in pools {
            for table in 2..=3u8 {
                for n in 3..=6usize {
                    for row in table_families(table, n, 4) {
                        if row.params.is_empty() {
                            continue;
                        }
                        let point = row.instantiate(pool);
                        assert_eq!(level_t(&point), row.level, "row {}", row.notation);
                    }
                }
            }
        }
    }

    #[test]
    fn nilpotent_rows_have_the_advertised_level() {
        for n in 3..=7usize {
            for row in table_families(1, n, 5) {
                let point = row.instantiate(&[]);
                assert_eq!(level_t(&point), row.level);
                assert!(point.is_nilpotent());
            }
        }
    }
}
