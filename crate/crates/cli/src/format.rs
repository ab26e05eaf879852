//! Number formatting for CLI output and CSV emission.

/// Format with 6 significant digits, trimming trailing zeros, switching to
/// scientific notation outside a readable magnitude window.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..6).contains(&exp) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - exp).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// Shortest round-trip decimal for CSV fields.
pub fn csv_f64(x: f64) -> String {
    format!("{x}")
}

/// Comma-joined gene list with 6 significant digits per gene.
pub fn real_genes(genes: &[f64]) -> String {
    genes.iter().map(|&g| sig6(g)).collect::<Vec<_>>().join(",")
}

pub fn int_genes<T: std::fmt::Display>(genes: &[T]) -> String {
    genes
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
