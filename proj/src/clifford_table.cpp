#include "clifford_table.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace randcliff {

namespace {

// Generator images of the elementary ops (all signs +):
//   H: X->Z, Z->X   S: X->Y, Z->Z   CNOT(c,t): Xc->XcXt, Xt->Xt, Zc->Zc, Zt->ZcZt
CliffordTableau elementary_tableau(ElementaryOp op) {
  CliffordTableau t = CliffordTableau::identity(2);
  switch (op) {
    case ElementaryOp::kHadamard0:
      t.set_x_image(0, PauliString::parse("ZI"));
      t.set_z_image(0, PauliString::parse("XI"));
      break;
    case ElementaryOp::kHadamard1:
      t.set_x_image(1, PauliString::parse("IZ"));
      t.set_z_image(1, PauliString::parse("IX"));
      break;
    case ElementaryOp::kPhase0:
      t.set_x_image(0, PauliString::parse("YI"));
      break;
    case ElementaryOp::kPhase1:
      t.set_x_image(1, PauliString::parse("IY"));
      break;
    case ElementaryOp::kCnot01:
      t.set_x_image(0, PauliString::parse("XX"));
      t.set_z_image(1, PauliString::parse("ZZ"));
      break;
    case ElementaryOp::kCnot10:
      t.set_x_image(1, PauliString::parse("XX"));
      t.set_z_image(0, PauliString::parse("ZZ"));
      break;
  }
  return t;
}

// elem composed after t: every image of t is conjugated through elem.
CliffordTableau compose_after(const CliffordTableau& elem, const CliffordTableau& t) {
  CliffordTableau out = t;
  for (std::size_t q = 0; q < 2; ++q) {
    out.set_x_image(q, elem.conjugate(t.x_image(q)));
    out.set_z_image(q, elem.conjugate(t.z_image(q)));
  }
  return out;
}

unsigned pauli2_code(const PauliString& p) {
  return TwoQubitCliffordTable::restricted_code(p, 0, 1);
}

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

} // namespace

uint32_t TwoQubitCliffordTable::pack_key(const CliffordTableau& t) {
  const PauliString* images[4] = {&t.x_image(0), &t.x_image(1), &t.z_image(0), &t.z_image(1)};
  uint32_t bits = 0;
  uint32_t signs = 0;
  for (int i = 0; i < 4; ++i) {
    bits = (bits << 4) | pauli2_code(*images[i]);
    signs = (signs << 1) | (images[i]->phase_exponent() == 2 ? 1u : 0u);
  }
  return (bits << 4) | signs;
}

CliffordTableau TwoQubitCliffordTable::unpack_key(uint32_t key) {
  CliffordTableau t = CliffordTableau::identity(2);
  uint32_t signs = key & 0xF;
  uint32_t bits = key >> 4;
  for (int i = 3; i >= 0; --i) {
    unsigned code = bits & 0xF;
    bits >>= 4;
    PauliString p(2);
    write_code(p, 0, 1, code);
    if ((signs >> (3 - i)) & 1) {
      p.set_phase_exponent(2);
    }
    if (i == 0) {
      t.set_x_image(0, p);
    } else if (i == 1) {
      t.set_x_image(1, p);
    } else if (i == 2) {
      t.set_z_image(0, p);
    } else {
      t.set_z_image(1, p);
    }
  }
  return t;
}

TwoQubitCliffordTable::TwoQubitCliffordTable() {
  CliffordTableau elems[6];
  for (int op = 0; op < 6; ++op) {
    elems[op] = elementary_tableau(static_cast<ElementaryOp>(op));
  }

  // Breadth-first closure from the identity; shortest words come for free.
  std::unordered_map<uint32_t, std::vector<uint8_t>> seen;
  std::deque<std::pair<CliffordTableau, uint32_t>> queue;
  CliffordTableau id = CliffordTableau::identity(2);
  seen.emplace(pack_key(id), std::vector<uint8_t>{});
  queue.emplace_back(id, pack_key(id));
  while (!queue.empty()) {
    auto [cur, cur_key] = queue.front();
    queue.pop_front();
    std::vector<uint8_t> cur_word = seen.at(cur_key); // copy: emplace below may rehash
    for (uint8_t op = 0; op < 6; ++op) {
      CliffordTableau next = compose_after(elems[op], cur);
      uint32_t key = pack_key(next);
      if (seen.contains(key)) {
        continue;
      }
      std::vector<uint8_t> word = cur_word;
      word.push_back(op);
      seen.emplace(key, std::move(word));
      queue.emplace_back(std::move(next), key);
    }
  }

  keys_.reserve(seen.size());
  for (const auto& [key, word] : seen) {
    keys_.push_back(key);
  }
  std::sort(keys_.begin(), keys_.end());
  words_.reserve(keys_.size());
  for (uint32_t key : keys_) {
    words_.push_back(std::move(seen.at(key)));
  }

  lut_.assign(keys_.size() * 16, 0);
  std::string canonical;
  canonical.reserve(keys_.size() * 16);
  for (std::size_t g = 0; g < keys_.size(); ++g) {
    CliffordTableau t = unpack_key(keys_[g]);
    for (unsigned code = 1; code < 16; ++code) {
      PauliString p(2);
      write_code(p, 0, 1, code);
      PauliString img = t.conjugate(p);
      uint8_t out = static_cast<uint8_t>(pauli2_code(img));
      if (img.phase_exponent() == 2) {
        out |= 0x10;
      } else if (img.phase_exponent() != 0) {
        throw std::logic_error("non-Hermitian conjugation image in gate table");
      }
      lut_[g * 16 + code] = out;
    }
    canonical += t.x_image(0).format();
    canonical += '|';
    canonical += t.x_image(1).format();
    canonical += '|';
    canonical += t.z_image(0).format();
    canonical += '|';
    canonical += t.z_image(1).format();
    canonical += ';';
  }

  uint64_t h = fnv1a64(canonical);
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  checksum_ = buf;
}

CliffordTableau TwoQubitCliffordTable::tableau(std::size_t gate_index) const {
  return unpack_key(keys_[gate_index]);
}

std::optional<std::size_t> TwoQubitCliffordTable::find_index(const CliffordTableau& t) const {
  if (t.num_qubits() != 2) {
    return std::nullopt;
  }
  uint32_t key = pack_key(t);
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - keys_.begin());
}

std::size_t TwoQubitCliffordTable::inverse_index(std::size_t gate_index) const {
  // The inverse maps G to the (signed) preimage of G under this gate.
  CliffordTableau inv = CliffordTableau::identity(2);
  for (unsigned target = 0; target < 4; ++target) {
    // targets in image order X0, X1, Z0, Z1 with codes 1, 4, 2, 8
    static constexpr unsigned target_code[4] = {1, 4, 2, 8};
    for (unsigned code = 1; code < 16; ++code) {
      uint8_t out = conjugate_code(gate_index, code);
      if ((out & 0xF) != target_code[target]) {
        continue;
      }
      PauliString p(2);
      write_code(p, 0, 1, code);
      if (out & 0x10) {
        p.set_phase_exponent(2);
      }
      switch (target) {
        case 0: inv.set_x_image(0, p); break;
        case 1: inv.set_x_image(1, p); break;
        case 2: inv.set_z_image(0, p); break;
        case 3: inv.set_z_image(1, p); break;
      }
      break;
    }
  }
  auto idx = find_index(inv);
  if (!idx) {
    throw std::logic_error("gate inverse not found in table");
  }
  return *idx;
}

const TwoQubitCliffordTable& shared_gate_table() {
  static const TwoQubitCliffordTable table;
  return table;
}

} // namespace randcliff
