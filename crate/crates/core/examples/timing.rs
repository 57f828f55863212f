use std::time::Instant;

use nilhecke::certificate::{cert_main, oracle_membership};
use nilhecke::coxeter::preset;
use nilhecke::descent::DescentAlgebra;

fn main() {
    for name in ["A1xA1", "A2", "B2", "B2_sym", "I2_5", "G2", "G2_sym", "H3"] {
        let g = preset(name).unwrap();
        let t = Instant::now();
        let c = cert_main(&g, 0, 1).unwrap();
        println!("{name}: cert {} terms {:?}", c.terms.len(), t.elapsed());
    }
    for name in ["A1xA1", "A2"] {
        let g = preset(name).unwrap();
        let alg = DescentAlgebra::new(&g);
        let bd = alg.demazure_braid_element(0, 1).unwrap();
        let m = g.m(0, 1) as usize;
        let t = Instant::now();
        let r = oracle_membership(&alg, &bd, m + 2, (m + 2) as u32).unwrap();
        println!("{name}: oracle {} {:?}", r.is_member(), t.elapsed());
    }
}
