use goldencf::*;

#[test]
fn scratch() {
    let f2 = FieldSpec::prime(2).unwrap();
    let s = GoldenSpec::phi_basic(f2).series(32).unwrap();
    eprintln!("series: {}", s.to_text());
    let out = series_to_cf(&s).unwrap();
    eprintln!("certified = {}, rational = {}", out.certified, out.rational_within_precision);
    for (i, q) in out.cf.preperiod().iter().enumerate() {
        eprintln!("A_{} = {}", i + 1, q);
    }
    // raw euclid
    let mut c_coeffs = vec![f2.zero(); 32];
    for i in 1..=32i64 {
        c_coeffs[(32 - i) as usize] = s.coeff(i).unwrap();
    }
    let c = Polynomial::new(f2, c_coeffs);
    let xn = Polynomial::monomial(f2.one(), 32);
    let (_, full) = cf_of_rational(&c, &xn).unwrap();
    for (i, q) in full.preperiod().iter().enumerate() {
        eprintln!("full A_{} deg {:?}", i + 1, q.deg());
    }
}
