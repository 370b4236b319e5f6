use std::time::Instant;
use turanbound::enumerate::enumerate_admissible;
use turanbound::jump::builtin_family;

#[test]
#[ignore]
fn time_f_prime_order_7() {
    let fam = builtin_family("F-prime").unwrap();
    let t = Instant::now();
    let graphs = enumerate_admissible(&fam, 7).unwrap();
    eprintln!("F-prime l=7: {} graphs in {:?}", graphs.len(), t.elapsed());
    assert_eq!(graphs.len(), 4042);
}
