//! 3-CNF formulas, DIMACS CNF I/O and exhaustive satisfiability.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{CnfError, ParseError, ParseErrorKind};

/// Variable index (0-based) with a polarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    /// 1-based signed DIMACS form.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var + 1)
        } else {
            write!(f, "!x{}", self.var + 1)
        }
    }
}

pub type Clause = Vec<Literal>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Clause>) -> Result<Self, CnfError> {
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() || clause.len() > 3 {
                return Err(CnfError::ClauseWidth {
                    clause: i,
                    width: clause.len(),
                });
            }
            if let Some(l) = clause.iter().find(|l| l.var >= variable_count) {
                return Err(CnfError::VariableOutOfRange {
                    variable: l.var,
                    variable_count,
                });
            }
        }
        Ok(CnfFormula {
            variable_count,
            clauses,
        })
    }

    /// Builds a formula from signed 1-based DIMACS literals.
    pub fn from_dimacs_clauses(
        variable_count: usize,
        clauses: &[&[i64]],
    ) -> Result<Self, CnfError> {
        let clauses = clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&l| {
                        assert!(l != 0, "0 is the clause terminator, not a literal");
                        Literal {
                            var: l.unsigned_abs() as usize - 1,
                            positive: l > 0,
                        }
                    })
                    .collect()
            })
            .collect();
        CnfFormula::new(variable_count, clauses)
    }

    /// `(x1 ∨ x2 ∨ x3)`.
    pub fn canonical_satisfiable() -> Self {
        CnfFormula::from_dimacs_clauses(3, &[&[1, 2, 3]]).unwrap()
    }

    /// All eight full-width clauses over three variables; every assignment
    /// falsifies exactly one of them.
    pub fn canonical_unsatisfiable() -> Self {
        let clauses = (0..8u8)
            .map(|mask| {
                (0..3)
                    .map(|v| Literal {
                        var: v,
                        positive: mask & (1 << v) == 0,
                    })
                    .collect()
            })
            .collect();
        CnfFormula::new(3, clauses).unwrap()
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(assignment)))
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return f.write_str("true");
        }
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            f.write_str("(")?;
            for (j, l) in c.iter().enumerate() {
                if j > 0 {
                    f.write_str(" | ")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Parses DIMACS CNF restricted to clauses of one to three literals.
///
/// Clauses may span lines; each ends at a `0`. Comment lines start with `c`
/// and a lone `%` line (SATLIB trailer) ends the input.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut current: Clause = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let err = |kind| ParseError::new(lineno, kind);
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line == "%" {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(err(ParseErrorKind::DuplicateHeader));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["p", "cnf", n, m] => n.parse::<usize>().ok().zip(m.parse::<usize>().ok()),
                _ => None,
            };
            let (n, m) =
                parsed.ok_or_else(|| err(ParseErrorKind::MalformedHeader(line.to_string())))?;
            header = Some((n, m, lineno));
            continue;
        }
        let (n, _, _) = header.ok_or_else(|| err(ParseErrorKind::MissingHeader))?;
        for tok in line.split_whitespace() {
            let lit: i64 = tok
                .parse()
                .map_err(|_| err(ParseErrorKind::MalformedLine(line.to_string())))?;
            if lit == 0 {
                if current.is_empty() || current.len() > 3 {
                    return Err(err(ParseErrorKind::ClauseWidth(current.len())));
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            let var = lit.unsigned_abs();
            if var > n as u64 {
                return Err(err(ParseErrorKind::VariableOutOfRange(var, n)));
            }
            current.push(Literal {
                var: var as usize - 1,
                positive: lit > 0,
            });
        }
        last_line = lineno;
    }

    let (n, m, header_line) = header.ok_or_else(|| {
        ParseError::new(text.lines().count().max(1), ParseErrorKind::MissingHeader)
    })?;
    if !current.is_empty() {
        return Err(ParseError::new(
            last_line,
            ParseErrorKind::UnterminatedClause,
        ));
    }
    if clauses.len() != m {
        return Err(ParseError::new(
            header_line,
            ParseErrorKind::CountMismatch {
                what: "clauses",
                declared: m,
                found: clauses.len(),
            },
        ));
    }
    Ok(CnfFormula::new(n, clauses).expect("widths and ranges checked while parsing"))
}

/// Header line then one clause per line, each terminated by `0`.
pub fn write_dimacs_cnf(f: &CnfFormula) -> String {
    let mut out = String::new();
    writeln!(out, "p cnf {} {}", f.variable_count(), f.clauses().len()).unwrap();
    for c in f.clauses() {
        for l in c {
            write!(out, "{} ", l.to_dimacs()).unwrap();
        }
        out.push_str("0\n");
    }
    out
}

pub const DEFAULT_VARIABLE_CAP: usize = 24;
/// Assignments are enumerated as bits of a `u64` counter.
pub const MAX_VARIABLE_CAP: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatConfig {
    pub variable_cap: usize,
}

impl Default for SatConfig {
    fn default() -> Self {
        SatConfig {
            variable_cap: DEFAULT_VARIABLE_CAP,
        }
    }
}

impl SatConfig {
    pub fn check(&self, f: &CnfFormula) -> Result<(), CnfError> {
        let cap = self.variable_cap.min(MAX_VARIABLE_CAP);
        if f.variable_count() > cap {
            return Err(CnfError::VariableCapExceeded {
                variables: f.variable_count(),
                cap,
            });
        }
        Ok(())
    }
}

/// Clause as a pair of bitmasks over the assignment word.
#[derive(Clone, Copy)]
struct MaskedClause {
    pos: u64,
    neg: u64,
}

impl MaskedClause {
    fn satisfied(self, bits: u64) -> bool {
        (bits & self.pos) | (!bits & self.neg) != 0
    }
}

fn masked(f: &CnfFormula) -> Vec<MaskedClause> {
    f.clauses()
        .iter()
        .map(|c| {
            c.iter().fold(MaskedClause { pos: 0, neg: 0 }, |mut m, l| {
                if l.positive {
                    m.pos |= 1 << l.var;
                } else {
                    m.neg |= 1 << l.var;
                }
                m
            })
        })
        .collect()
}

/// Exhaustive satisfiability check.
///
/// Assignments are visited in binary counting order with variable `x1` as
/// the least significant bit, so the returned witness is the first
/// satisfying assignment in that order.
pub fn brute_force_sat(f: &CnfFormula, config: &SatConfig) -> Result<Option<Vec<bool>>, CnfError> {
    config.check(f)?;
    let clauses = masked(f);
    let n = f.variable_count();
    let found = (0..1u64 << n).find(|&bits| clauses.iter().all(|c| c.satisfied(bits)));
    Ok(found.map(|bits| (0..n).map(|v| bits >> v & 1 == 1).collect()))
}

pub fn is_satisfiable(f: &CnfFormula, config: &SatConfig) -> Result<bool, CnfError> {
    brute_force_sat(f, config).map(|a| a.is_some())
}

/// A sequence of `2k` formulas in which a satisfiable formula is only ever
/// preceded by satisfiable formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneChain {
    formulas: Vec<CnfFormula>,
    satisfiable: Vec<bool>,
}

impl MonotoneChain {
    /// Decides every member by brute force and checks the ordering.
    pub fn new(formulas: Vec<CnfFormula>, config: &SatConfig) -> Result<Self, CnfError> {
        check_chain_length(formulas.len())?;
        let satisfiable = formulas
            .iter()
            .map(|f| is_satisfiable(f, config))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(index) = first_monotone_violation(&satisfiable) {
            return Err(CnfError::NotMonotone { index });
        }
        Ok(MonotoneChain {
            formulas,
            satisfiable,
        })
    }

    pub fn k(&self) -> usize {
        self.formulas.len() / 2
    }

    pub fn formulas(&self) -> &[CnfFormula] {
        &self.formulas
    }

    /// Brute-force verdict per member, computed at construction.
    pub fn satisfiable(&self) -> &[bool] {
        &self.satisfiable
    }

    /// Length of the satisfiable prefix, equal to the number of satisfiable
    /// members.
    pub fn satisfiable_count(&self) -> usize {
        self.satisfiable.iter().take_while(|&&s| s).count()
    }
}

fn check_chain_length(len: usize) -> Result<(), CnfError> {
    if len < 2 || !len.is_multiple_of(2) {
        return Err(CnfError::ChainLength(len));
    }
    Ok(())
}

/// Index of the first satisfiable member that follows an unsatisfiable one.
fn first_monotone_violation(sat: &[bool]) -> Option<usize> {
    (1..sat.len()).find(|&j| sat[j] && !sat[j - 1])
}

/// First `t` members satisfiable, remaining `2k - t` unsatisfiable.
pub fn canonical_chain(k: usize, t: usize) -> Result<MonotoneChain, CnfError> {
    if k == 0 {
        return Err(CnfError::ZeroK);
    }
    if t > 2 * k {
        return Err(CnfError::PrefixOutOfRange { k, t });
    }
    let formulas = (0..2 * k)
        .map(|j| {
            if j < t {
                CnfFormula::canonical_satisfiable()
            } else {
                CnfFormula::canonical_unsatisfiable()
            }
        })
        .collect();
    MonotoneChain::new(formulas, &SatConfig::default())
}

pub fn is_monotone_chain(formulas: &[CnfFormula], config: &SatConfig) -> Result<bool, CnfError> {
    check_chain_length(formulas.len())?;
    let sat = formulas
        .iter()
        .map(|f| is_satisfiable(f, config))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(first_monotone_violation(&sat).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SatConfig {
        SatConfig::default()
    }

    #[test]
    fn parses_single_clause() {
        let f = parse_dimacs_cnf("p cnf 3 1\n1 2 3 0").unwrap();
        assert_eq!(f.variable_count(), 3);
        assert_eq!(
            f.clauses(),
            &[vec![Literal::pos(0), Literal::pos(1), Literal::pos(2)]]
        );
    }

    #[test]
    fn parses_unit_clauses() {
        let f = parse_dimacs_cnf("p cnf 1 2\n1 0\n-1 0").unwrap();
        assert_eq!(f.clauses(), &[vec![Literal::pos(0)], vec![Literal::neg(0)]]);
        assert_eq!(f.to_string(), "(x1) & (!x1)");
    }

    #[test]
    fn variable_out_of_range() {
        let e = parse_dimacs_cnf("p cnf 2 1\n1 2 3 0").unwrap_err();
        assert_eq!(
            (e.line, e.kind),
            (2, ParseErrorKind::VariableOutOfRange(3, 2))
        );
    }

    #[test]
    fn parse_errors() {
        let wide = parse_dimacs_cnf("p cnf 4 1\n1 2 3 4 0\n").unwrap_err();
        assert_eq!(wide.kind, ParseErrorKind::ClauseWidth(4));
        let empty = parse_dimacs_cnf("p cnf 4 1\n0\n").unwrap_err();
        assert_eq!(empty.kind, ParseErrorKind::ClauseWidth(0));
        let header = parse_dimacs_cnf("p sat 4 1\n").unwrap_err();
        assert!(matches!(header.kind, ParseErrorKind::MalformedHeader(_)));
        let dup = parse_dimacs_cnf("p cnf 1 0\np cnf 1 0\n").unwrap_err();
        assert_eq!(dup.kind, ParseErrorKind::DuplicateHeader);
        let count = parse_dimacs_cnf("p cnf 1 2\n1 0\n").unwrap_err();
        assert!(matches!(count.kind, ParseErrorKind::CountMismatch { .. }));
        let open = parse_dimacs_cnf("p cnf 2 1\n1 2\n").unwrap_err();
        assert_eq!(open.kind, ParseErrorKind::UnterminatedClause);
        let junk = parse_dimacs_cnf("p cnf 2 1\n1 x 0\n").unwrap_err();
        assert!(matches!(junk.kind, ParseErrorKind::MalformedLine(_)));
    }

    #[test]
    fn clauses_may_span_lines_and_comments_are_skipped() {
        let f = parse_dimacs_cnf("c hello\np cnf 3 2\n1 -2\n3 0 -1\nc mid\n0\n%\n0\n").unwrap();
        assert_eq!(f.clauses().len(), 2);
        assert_eq!(f.clauses()[1], vec![Literal::neg(0)]);
    }

    #[test]
    fn writer_emits_canonical_form() {
        let f = CnfFormula::from_dimacs_clauses(3, &[&[1, -2, 3], &[-3]]).unwrap();
        assert_eq!(write_dimacs_cnf(&f), "p cnf 3 2\n1 -2 3 0\n-3 0\n");
    }

    #[test]
    fn first_witness_in_counting_order() {
        let w = brute_force_sat(&CnfFormula::canonical_satisfiable(), &cfg()).unwrap();
        assert_eq!(w, Some(vec![true, false, false]));
    }

    #[test]
    fn canonical_unsat_and_contradiction() {
        assert_eq!(
            brute_force_sat(&CnfFormula::canonical_unsatisfiable(), &cfg()),
            Ok(None)
        );
        let f = parse_dimacs_cnf("p cnf 1 2\n1 0\n-1 0").unwrap();
        assert_eq!(brute_force_sat(&f, &cfg()), Ok(None));
    }

    #[test]
    fn empty_formula_is_satisfiable() {
        let f = CnfFormula::new(0, vec![]).unwrap();
        assert_eq!(brute_force_sat(&f, &cfg()), Ok(Some(vec![])));
    }

    #[test]
    fn variable_cap() {
        let f = CnfFormula::new(30, vec![vec![Literal::pos(29)]]).unwrap();
        assert_eq!(
            brute_force_sat(&f, &cfg()),
            Err(CnfError::VariableCapExceeded {
                variables: 30,
                cap: 24
            })
        );
        let big = SatConfig { variable_cap: 40 };
        assert!(brute_force_sat(&f, &big).unwrap().is_some());
    }

    #[test]
    fn canonical_chains() {
        let s = |c: &MonotoneChain| c.satisfiable().to_vec();
        assert_eq!(s(&canonical_chain(1, 2).unwrap()), vec![true, true]);
        assert_eq!(s(&canonical_chain(1, 1).unwrap()), vec![true, false]);
        assert_eq!(s(&canonical_chain(2, 0).unwrap()), vec![false; 4]);
        assert_eq!(
            canonical_chain(1, 3).unwrap_err(),
            CnfError::PrefixOutOfRange { k: 1, t: 3 }
        );
        assert_eq!(canonical_chain(0, 0).unwrap_err(), CnfError::ZeroK);
        for k in 1..=3 {
            for t in 0..=2 * k {
                let c = canonical_chain(k, t).unwrap();
                assert_eq!(c.k(), k);
                assert_eq!(c.satisfiable_count(), t);
                assert_eq!(c.satisfiable().iter().filter(|&&b| b).count(), t);
            }
        }
    }

    #[test]
    fn monotone_checks() {
        let sat = CnfFormula::canonical_satisfiable();
        let unsat = CnfFormula::canonical_unsatisfiable();
        assert_eq!(
            is_monotone_chain(&[sat.clone(), unsat.clone()], &cfg()),
            Ok(true)
        );
        assert_eq!(
            is_monotone_chain(&[unsat.clone(), sat.clone()], &cfg()),
            Ok(false)
        );
        assert_eq!(
            is_monotone_chain(&[], &cfg()),
            Err(CnfError::ChainLength(0))
        );
        assert_eq!(
            is_monotone_chain(std::slice::from_ref(&sat), &cfg()),
            Err(CnfError::ChainLength(1))
        );
        assert_eq!(
            MonotoneChain::new(vec![sat.clone(), unsat.clone(), sat, unsat], &cfg()).unwrap_err(),
            CnfError::NotMonotone { index: 2 }
        );
    }
}
