//! `xover demo`: run the worked golden examples and report pass/fail.

use crate::format::sig6;
use crate::CliError;
use xover::binary::three_parent;
use xover::real::{blx_range, bx_gamma, lpx, lpx_pair, sax, sbx, sbx_spread, wax, GenePair};
use xover::{BitChromosome, CrossoverParams, RandomSource, RealChromosome};

struct GoldenRow {
    name: &'static str,
    expected: String,
    computed: String,
    pass: bool,
}

fn close(computed: f64, expected: f64, tol: f64) -> bool {
    (computed - expected).abs() <= tol
}

fn pair_row(name: &'static str, computed: (f64, f64), expected: (f64, f64), tol: f64) -> GoldenRow {
    GoldenRow {
        name,
        expected: format!("{}, {}", sig6(expected.0), sig6(expected.1)),
        computed: format!("{}, {}", sig6(computed.0), sig6(computed.1)),
        pass: close(computed.0, expected.0, tol) && close(computed.1, expected.1, tol),
    }
}

fn value_row(name: &'static str, computed: f64, expected: f64, tol: f64) -> GoldenRow {
    GoldenRow {
        name,
        expected: sig6(expected),
        computed: sig6(computed),
        pass: close(computed, expected, tol),
    }
}

fn rows() -> Vec<GoldenRow> {
    let mut rows = Vec::new();

    // three-parent majority on the classic 8-bit triple
    let c1 = BitChromosome::new(vec![1, 1, 1, 0, 0, 0, 0, 0]).unwrap();
    let c2 = BitChromosome::new(vec![0, 0, 0, 0, 1, 1, 1, 0]).unwrap();
    let c3 = BitChromosome::new(vec![0, 1, 0, 0, 1, 0, 1, 0]).unwrap();
    let expected_bits = vec![0, 1, 0, 0, 1, 0, 1, 0];
    let (o1, o2, o3) = three_parent(&c1, &c2, &c3).unwrap();
    let show = |c: &BitChromosome| c.genes().iter().map(|b| b.to_string()).collect::<String>();
    rows.push(GoldenRow {
        name: "three-parent majority",
        expected: format!(
            "{0} / {0} / {0}",
            show(&BitChromosome::new(expected_bits.clone()).unwrap())
        ),
        computed: format!("{} / {} / {}", show(&o1), show(&o2), show(&o3)),
        pass: o1.genes() == expected_bits
            && o2.genes() == expected_bits
            && o3.genes() == expected_bits,
    });

    // single arithmetic blend at one gene
    let pair = GenePair::new(0.13, 0.94).unwrap();
    rows.push(value_row(
        "single arithmetic gene value",
        sax(pair, 0.5).unwrap(),
        0.535,
        1e-12,
    ));

    // whole arithmetic coefficient pairs on the first gene
    let wide = GenePair::new(0.88, 0.64).unwrap();
    rows.push(value_row(
        "whole arithmetic pair (0.5, -0.5)",
        wax(wide, 0.5, -0.5).unwrap(),
        0.12,
        1e-12,
    ));
    rows.push(value_row(
        "whole arithmetic pair (1.5, 0.5)",
        wax(wide, 1.5, 0.5).unwrap(),
        1.64,
        1e-12,
    ));
    rows.push(value_row(
        "whole arithmetic pair (-0.5, 1.5)",
        wax(wide, -0.5, 1.5).unwrap(),
        0.52,
        1e-12,
    ));

    // blend sampling interval bounds and the reported sample points
    let (lo, hi) = blx_range(pair, 0.5).unwrap();
    rows.push(GoldenRow {
        name: "blend interval contains reported samples",
        expected: "[-0.275, 1.345] holding 0.7 and 1.2".to_string(),
        computed: format!("[{}, {}]", sig6(lo), sig6(hi)),
        pass: close(lo, -0.275, 1e-12)
            && close(hi, 1.345, 1e-12)
            && lo <= 0.7
            && 0.7 <= hi
            && lo <= 1.2
            && 1.2 <= hi,
    });

    // blend gamma form collapses to the midpoint at alpha = r = 0.5
    rows.push(pair_row(
        "blend gamma offspring",
        bx_gamma(pair, 0.5, 0.5).unwrap(),
        (0.535, 0.535),
        1e-12,
    ));

    // SBX spread factor and offspring
    let spread = sbx_spread(0.4, 2.0).unwrap();
    rows.push(value_row("sbx spread factor", spread, 0.928, 1e-3));
    rows.push(pair_row(
        "sbx offspring",
        sbx(pair, spread).unwrap(),
        (0.1592, 0.9108),
        5e-4,
    ));

    // LPX gene pair and full chromosome rows
    rows.push(pair_row(
        "lpx gene pair",
        lpx_pair(0.13, 0.94, 0.2).unwrap(),
        (0.4177, 1.171),
        5e-4,
    ));

    let p1 = RealChromosome::new(vec![0.88, 0.13, 0.25]).unwrap();
    let p2 = RealChromosome::new(vec![0.64, 0.94, 0.35]).unwrap();
    let params = CrossoverParams {
        alpha: Some(0.2),
        gene_index: Some(2),
        ..Default::default()
    };
    let mut rng = RandomSource::from_seed(0);
    let (l1, l2) = lpx(&p1, &p2, &params, &mut rng).unwrap();
    let row_ok = |c: &RealChromosome, untouched: (f64, f64), blended: f64| {
        c.genes()[0] == untouched.0
            && c.genes()[2] == untouched.1
            && close(c.genes()[1], blended, 5e-4)
    };
    rows.push(GoldenRow {
        name: "lpx chromosome rows",
        expected: "0.88,0.4177,0.25 / 0.64,1.171,0.35".to_string(),
        computed: format!(
            "{} / {}",
            crate::format::real_genes(l1.genes()),
            crate::format::real_genes(l2.genes())
        ),
        pass: row_ok(&l1, (0.88, 0.25), 0.4177) && row_ok(&l2, (0.64, 0.35), 1.171),
    });

    rows
}

pub fn run() -> Result<(), CliError> {
    let rows = rows();
    let name_width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let expected_width = rows.iter().map(|r| r.expected.len()).max().unwrap_or(0);
    println!(
        "{:<name_width$}  {:<expected_width$}  computed",
        "check", "expected"
    );
    let mut failures = 0;
    for row in &rows {
        println!(
            "{:<name_width$}  {:<expected_width$}  {}  [{}]",
            row.name,
            row.expected,
            row.computed,
            if row.pass { "PASS" } else { "FAIL" }
        );
        failures += usize::from(!row.pass);
    }
    if failures > 0 {
        return Err(CliError::Golden(format!(
            "{failures} of {} golden checks failed",
            rows.len()
        )));
    }
    println!("all {} golden checks passed", rows.len());
    Ok(())
}
