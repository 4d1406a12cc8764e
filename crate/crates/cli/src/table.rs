use neutro_core::relation::NeutrosophicRelation;

/// Aligned text table of the stored rows, one line per pair, in tuple-space
/// order.
pub fn format_table(r: &NeutrosophicRelation) -> String {
    let mut header: Vec<String> = r.scheme().names().map(String::from).collect();
    header.push("belief".into());
    header.push("doubt".into());
    let mut lines = vec![header];
    for (t, ps) in r.rows() {
        let values: Vec<String> = r.scheme().values(t).map(String::from).collect();
        for p in ps.iter() {
            let mut line = values.clone();
            line.push(p.belief.to_string());
            line.push(p.doubt.to_string());
            lines.push(line);
        }
    }
    let widths: Vec<usize> = (0..lines[0].len())
        .map(|c| lines.iter().map(|l| l[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for l in &lines {
        let cells: Vec<String> = l
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    let n = r.stored_len();
    out.push_str(&format!("({n} row{})\n", if n == 1 { "" } else { "s" }));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::parse_document;

    #[test]
    fn aligned_columns() {
        let r = parse_document("scheme: Object-id{o1,o2} Object{T-72}\nrow: o2,T-72 | 0.05, 1/3\nrow: o1,T-72 | 1, 0\n").unwrap();
        assert_eq!(
            format_table(&r),
            "Object-id  Object  belief  doubt\n\
             o1         T-72    1       0\n\
             o2         T-72    0.05    1/3\n\
             (2 rows)\n"
        );
    }
}
