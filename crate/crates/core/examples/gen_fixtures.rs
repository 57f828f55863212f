use nilhecke::coxeter::preset;
use nilhecke::equivariant::{EquivariantModule, ModuleFixture, PolyMatrix};
use nilhecke::json::{to_pretty, GroupConfig};
use nilhecke::poly::Polynomial;

/// (name, preset, description, degrees, change-of-basis rows)
type Spec<'a> = (&'a str, &'a str, &'a str, &'a [i64], &'a [&'a [&'a str]]);

fn main() {
    let out = std::env::args().nth(1).unwrap();
    let specs: &[Spec] = &[
        ("a1_twisted", "A1", "trivial module in a unitriangular basis", &[0, 1], &[&["1", "a1"], &["0", "1"]]),
        ("a2_twisted", "A2", "trivial module in a unitriangular basis", &[0, 2, 3], &[&["1", "a1*a2", "a2^3"], &["0", "1", "a1"], &["0", "0", "1"]]),
        ("b2_twisted", "B2", "trivial module in a unitriangular basis", &[0, 1, 3], &[&["1", "a2", "a1^2*a2"], &["0", "1", "a1*a2"], &["0", "0", "1"]]),
        ("i2_5_twisted", "I2_5", "trivial module in a unitriangular basis", &[0, 2], &[&["1", "a1^2 + c*a1*a2"], &["0", "1"]]),
        ("g2_sym_twisted", "G2_sym", "trivial module in a unitriangular basis", &[1, 2, 4], &[&["1", "a1", "a2^3"], &["0", "1", "a1*a2"], &["0", "0", "1"]]),
        ("a3_twisted", "A3", "trivial module in a unitriangular basis", &[0, 1, 2], &[&["1", "a2", "a1*a3"], &["0", "1", "a3"], &["0", "0", "1"]]),
        ("h3_twisted", "H3", "trivial module in a unitriangular basis", &[0, 2], &[&["1", "a1*a3 - c*a2^2"], &["0", "1"]]),
    ];
    for (name, grp, desc, degs, rows) in specs {
        let g = preset(grp).unwrap();
        let p = PolyMatrix::new(rows.iter().map(|r| r.iter().map(|s| Polynomial::parse(g.field(), g.rank(), s).unwrap()).collect()).collect()).unwrap();
        let m = EquivariantModule::unitriangular_twist(&g, degs.to_vec(), &p).unwrap();
        let fx = ModuleFixture::from_module(name, desc, GroupConfig::preset(grp), &m, vec![true; g.rank()]);
        std::fs::write(format!("{out}/{name}.json"), to_pretty(&fx)).unwrap();
    }
}
