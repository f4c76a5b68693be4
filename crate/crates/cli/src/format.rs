//! Line-oriented ASCII formats for posets, multiplication tables, and
//! order maps. Blank lines and lines starting with `#` are ignored; all
//! emitters produce LF line endings and sorted, normalized output, so
//! `emit ∘ parse` is the identity on normalized files.

use anyhow::{anyhow, bail, Result};
use posemigroup::{BandOp, Poset, PosetMap};

/// Significant lines with their 1-based line numbers.
fn significant(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line_no: usize, token: &str, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| anyhow!("line {line_no}: expected {what}, got `{token}`"))
}

/// Parses `poset <n>` followed by one `cover <a> <b>` line per cover pair.
/// The order is the reflexive-transitive closure of the pairs; a pair with
/// an element strictly between its endpoints is rejected as not a cover.
pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = significant(text);
    let (line_no, header) = lines.next().ok_or_else(|| anyhow!("empty poset file"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["poset", n] => parse_usize(line_no, n, "an element count")?,
        _ => bail!("line {line_no}: expected `poset <n>`"),
    };
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for (line_no, line) in lines {
        let (a, b) = match line.split_whitespace().collect::<Vec<_>>()[..] {
            ["cover", a, b] => (
                parse_usize(line_no, a, "an element")?,
                parse_usize(line_no, b, "an element")?,
            ),
            _ => bail!("line {line_no}: expected `cover <a> <b>`"),
        };
        if a >= n || b >= n {
            bail!("line {line_no}: element out of range (n = {n})");
        }
        if a == b {
            bail!("line {line_no}: cover relates {a} to itself");
        }
        if pairs.iter().any(|&(x, y, _)| (x, y) == (a, b)) {
            bail!("line {line_no}: duplicate cover {a} {b}");
        }
        pairs.push((a, b, line_no));
    }
    let strict: Vec<(usize, usize)> = pairs.iter().map(|&(a, b, _)| (a, b)).collect();
    let p = Poset::from_pairs(n, &strict).map_err(|e| anyhow!("not a poset: {e}"))?;
    let covers = p.covers();
    for &(a, b, line_no) in &pairs {
        if !covers.contains(&(a, b)) {
            bail!("line {line_no}: {a} < {b} is not a cover (an element lies strictly between)");
        }
    }
    Ok(p)
}

pub fn emit_poset(p: &Poset) -> String {
    let mut out = format!("poset {}\n", p.n());
    for (a, b) in p.covers() {
        out.push_str(&format!("cover {a} {b}\n"));
    }
    out
}

/// Parses `band <n>` followed by `n` rows of `n` entries; row `x` lists
/// `x·0 … x·(n-1)`.
pub fn parse_band(text: &str) -> Result<BandOp> {
    let mut lines = significant(text);
    let (line_no, header) = lines.next().ok_or_else(|| anyhow!("empty band file"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["band", n] => parse_usize(line_no, n, "an element count")?,
        _ => bail!("line {line_no}: expected `band <n>`"),
    };
    let mut table = Vec::with_capacity(n * n);
    for row in 0..n {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| anyhow!("missing row {row}: expected {n} table rows"))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != n {
            bail!("line {line_no}: row {row} has {} entries, expected {n}", entries.len());
        }
        for e in entries {
            table.push(parse_usize(line_no, e, "a table entry")?);
        }
    }
    if let Some((line_no, _)) = lines.next() {
        bail!("line {line_no}: trailing content after {n} rows");
    }
    BandOp::new(n, table).map_err(|e| anyhow!("invalid table: {e}"))
}

pub fn emit_band(op: &BandOp) -> String {
    let n = op.n();
    let mut out = format!("band {n}\n");
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| op.apply(x, y).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses `map <n> <m>` followed by one `send <x> <y>` line per domain
/// element, against the given domain and codomain posets.
pub fn parse_map(text: &str, dom: &Poset, cod: &Poset) -> Result<PosetMap> {
    let mut lines = significant(text);
    let (line_no, header) = lines.next().ok_or_else(|| anyhow!("empty map file"))?;
    let (n, m) = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["map", n, m] => (
            parse_usize(line_no, n, "a domain size")?,
            parse_usize(line_no, m, "a codomain size")?,
        ),
        _ => bail!("line {line_no}: expected `map <n> <m>`"),
    };
    if n != dom.n() || m != cod.n() {
        bail!("map is {n} -> {m} but the posets have {} and {} elements", dom.n(), cod.n());
    }
    let unset = usize::MAX;
    let mut mapping = vec![unset; n];
    for (line_no, line) in lines {
        let (x, y) = match line.split_whitespace().collect::<Vec<_>>()[..] {
            ["send", x, y] => (
                parse_usize(line_no, x, "an element")?,
                parse_usize(line_no, y, "an element")?,
            ),
            _ => bail!("line {line_no}: expected `send <x> <y>`"),
        };
        if x >= n || y >= m {
            bail!("line {line_no}: element out of range");
        }
        if mapping[x] != unset {
            bail!("line {line_no}: element {x} sent twice");
        }
        mapping[x] = y;
    }
    if let Some(x) = mapping.iter().position(|&v| v == unset) {
        bail!("element {x} has no image");
    }
    PosetMap::new(dom.clone(), cod.clone(), mapping)
        .map_err(|e| anyhow!("not an order homomorphism: {e}"))
}

pub fn emit_map(f: &PosetMap) -> String {
    let mut out = format!("map {} {}\n", f.dom().n(), f.cod().n());
    for x in 0..f.dom().n() {
        out.push_str(&format!("send {} {}\n", x, f.apply(x)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use posemigroup::fixtures;

    #[test]
    fn two_chain_round_trip() {
        let p = parse_poset("poset 2\ncover 0 1\n").unwrap();
        assert_eq!(p, Poset::chain(2));
        assert_eq!(emit_poset(&p), "poset 2\ncover 0 1\n");
    }

    #[test]
    fn crown_emits_six_sorted_cover_lines() {
        let p = fixtures::named_poset("crown").unwrap();
        let text = emit_poset(&p);
        let covers: Vec<&str> = text.lines().skip(1).collect();
        assert_eq!(covers.len(), 6);
        let mut sorted = covers.clone();
        sorted.sort();
        assert_eq!(covers, sorted);
        assert_eq!(parse_poset(&text).unwrap(), p);
    }

    #[test]
    fn non_cover_pair_is_rejected_with_its_line() {
        let err = parse_poset("poset 3\ncover 0 1\ncover 0 2\ncover 1 2\n")
            .unwrap_err()
            .to_string();
        assert!(err.contains("line 3"), "{err}");
        assert!(err.contains("not a cover"), "{err}");
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let p = parse_poset("# a chain\n\nposet 2\n# covers follow\ncover 0 1\n").unwrap();
        assert_eq!(p, Poset::chain(2));
    }

    #[test]
    fn cycles_are_rejected() {
        assert!(parse_poset("poset 2\ncover 0 1\ncover 1 0\n").is_err());
    }

    #[test]
    fn trivial_band_parses() {
        let op = parse_band("band 1\n0\n").unwrap();
        assert_eq!(op, BandOp::right_zero(1));
    }

    #[test]
    fn band_round_trip_on_golden_tables() {
        for name in fixtures::TABLE_NAMES {
            let (pname, rows) = fixtures::named_table(name).unwrap();
            let p = fixtures::named_poset(pname).unwrap();
            let op = BandOp::new(p.n(), rows).unwrap();
            assert_eq!(parse_band(&emit_band(&op)).unwrap(), op);
        }
    }

    #[test]
    fn short_band_row_reports_its_index() {
        let err = parse_band("band 2\n0 1\n1\n").unwrap_err().to_string();
        assert!(err.contains("row 1"), "{err}");
    }

    #[test]
    fn map_round_trip() {
        let p = fixtures::named_poset("homo-p").unwrap();
        let t = fixtures::named_poset("homo-t").unwrap();
        let f = PosetMap::new(p.clone(), t.clone(), fixtures::HOMO_MAP.to_vec()).unwrap();
        let text = emit_map(&f);
        assert_eq!(parse_map(&text, &p, &t).unwrap(), f);
    }
}
