#pragma once

#include <string>

namespace ewin {

// re-checks a certificate from its JSON text alone: checksum, tiling of the declared region,
// integrality and the exact norm bound of every witness, and the prime condition in weighted mode
struct CertificateCheck {
  bool sound = false;
  bool complete = false;
  long covered = 0, exceptional = 0;
  std::string reason;  // first failure
  std::string str() const;
};

CertificateCheck verify_certificate(const std::string& json_text);
CertificateCheck verify_certificate_file(const std::string& path);

}  // namespace ewin
