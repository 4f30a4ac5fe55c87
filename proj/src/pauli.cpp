#include "pauli.hpp"

#include <bit>
#include <stdexcept>

namespace randcliff {

PauliString PauliString::parse(const std::string& text) {
  std::size_t pos = 0;
  uint8_t phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    bool neg = text[pos] == '-';
    ++pos;
    bool imag = pos < text.size() && text[pos] == 'i';
    if (imag) {
      ++pos;
    }
    phase = static_cast<uint8_t>((neg ? 2 : 0) + (imag ? 1 : 0));
  }
  if (pos >= text.size()) {
    throw std::invalid_argument("empty Pauli string: \"" + text + "\"");
  }
  PauliString p(text.size() - pos);
  p.phase_ = phase;
  for (std::size_t q = 0; pos < text.size(); ++q, ++pos) {
    p.set_letter(q, text[pos]);
  }
  return p;
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, char letter) {
  PauliString p(n);
  if (qubit >= n) {
    throw std::invalid_argument("qubit index out of range");
  }
  p.set_letter(qubit, letter);
  return p;
}

bool PauliString::is_identity() const {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] | z_[w]) {
      return false;
    }
  }
  return true;
}

void PauliString::set_x(std::size_t q, bool v) {
  uint64_t bit = 1ULL << (q & 63);
  x_[q >> 6] = (x_[q >> 6] & ~bit) | (v ? bit : 0);
}

void PauliString::set_z(std::size_t q, bool v) {
  uint64_t bit = 1ULL << (q & 63);
  z_[q >> 6] = (z_[q >> 6] & ~bit) | (v ? bit : 0);
}

void PauliString::set_letter(std::size_t q, char letter) {
  switch (letter) {
    case 'I': set_x(q, false); set_z(q, false); break;
    case 'X': set_x(q, true); set_z(q, false); break;
    case 'Y': set_x(q, true); set_z(q, true); break;
    case 'Z': set_x(q, false); set_z(q, true); break;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + letter + "'");
  }
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    w += static_cast<std::size_t>(std::popcount(x_[i] | z_[i]));
  }
  return w;
}

std::size_t PauliString::count_y() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    w += static_cast<std::size_t>(std::popcount(x_[i] & z_[i]));
  }
  return w;
}

void PauliString::check_same_size(const PauliString& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("Pauli dimension mismatch: " + std::to_string(n_) +
                                " vs " + std::to_string(other.n_));
  }
}

void PauliString::multiply_inplace(const PauliString& other) {
  check_same_size(other);
  // Per-site phase of L1*L2 = i^t L3: t = +1 on the cyclic pairs
  // (X,Y),(Y,Z),(Z,X) and -1 on the anticyclic ones. Counted word-parallel.
  int64_t plus = 0;
  int64_t minus = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    uint64_t x1 = x_[w], z1 = z_[w];
    uint64_t x2 = other.x_[w], z2 = other.z_[w];
    uint64_t cyc = (x1 & ~z1 & x2 & z2)    // X * Y
                 | (x1 & z1 & ~x2 & z2)    // Y * Z
                 | (~x1 & z1 & x2 & ~z2);  // Z * X
    uint64_t acyc = (x1 & z1 & x2 & ~z2)   // Y * X
                  | (~x1 & z1 & x2 & z2)   // Z * Y
                  | (x1 & ~z1 & ~x2 & z2); // X * Z
    plus += std::popcount(cyc);
    minus += std::popcount(acyc);
    x_[w] = x1 ^ x2;
    z_[w] = z1 ^ z2;
  }
  phase_ = static_cast<uint8_t>((phase_ + other.phase_ + ((plus - minus) % 4) + 4) & 3);
}

PauliString PauliString::multiply(const PauliString& other) const {
  PauliString r = *this;
  r.multiply_inplace(other);
  return r;
}

int PauliString::symplectic_product(const PauliString& other) const {
  check_same_size(other);
  int64_t acc = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) {
    acc += std::popcount(x_[w] & other.z_[w]);
    acc += std::popcount(z_[w] & other.x_[w]);
  }
  return static_cast<int>(acc & 1);
}

std::string PauliString::format() const {
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::string s = prefix[phase_];
  s.reserve(s.size() + n_);
  for (std::size_t q = 0; q < n_; ++q) {
    s += letter(q);
  }
  return s;
}

bool PauliString::has_support_in(std::size_t begin, std::size_t end) const {
  for (std::size_t q = begin; q < end; ++q) {
    if (letter_code(q) != 0) {
      return true;
    }
  }
  return false;
}

bool PauliString::operator==(const PauliString& other) const {
  return n_ == other.n_ && phase_ == other.phase_ && x_ == other.x_ && z_ == other.z_;
}

int PauliString::compare(const PauliString& other) const {
  if (n_ != other.n_) {
    return n_ < other.n_ ? -1 : 1;
  }
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] != other.x_[w]) {
      return x_[w] < other.x_[w] ? -1 : 1;
    }
    if (z_[w] != other.z_[w]) {
      return z_[w] < other.z_[w] ? -1 : 1;
    }
  }
  if (phase_ != other.phase_) {
    return phase_ < other.phase_ ? -1 : 1;
  }
  return 0;
}

} // namespace randcliff
