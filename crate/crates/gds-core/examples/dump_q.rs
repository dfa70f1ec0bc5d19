use gds_core::experiment::seeded_basis;
use std::io::Write;

fn main() {
    let q = seeded_basis(1000, 12345).unwrap();
    let mut f = std::io::BufWriter::new(std::fs::File::create("/tmp/q.csv").unwrap());
    for i in 0..q.rows() {
        let line: Vec<String> = q.row(i).iter().map(|v| format!("{v:.17e}")).collect();
        writeln!(f, "{}", line.join(",")).unwrap();
    }
    let r = gds_core::gds_report(&q).unwrap();
    println!("library err_orth = {:.3e}", r.err_orth);
}
