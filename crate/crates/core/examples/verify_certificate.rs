//! Serializes a certificate, reads it back, and shows what a tampered file reports.

use lacn::constructions::construct_c2m_o2n;
use lacn::{CertificateJson, LabelingCertificate};

fn main() -> lacn::Result<()> {
    let cert = construct_c2m_o2n(3, 2)?;
    let text = serde_json::to_string_pretty(&cert.to_json()).unwrap();
    println!("{text}");

    let json: CertificateJson = serde_json::from_str(&text).unwrap();
    let back = LabelingCertificate::from_json(&json)?;
    println!("round trip valid: {}, colors: {}", back.valid, back.color_count());

    let mut stale = json.clone();
    if let Some(c) = stale.colors.values_mut().next() {
        *c += 1;
    }
    match LabelingCertificate::from_json(&stale) {
        Ok(_) => println!("tampered file accepted"),
        Err(e) => println!("tampered file rejected: {e}"),
    }
    Ok(())
}
