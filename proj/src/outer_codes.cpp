#include "lfc/outer_codes.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace lfc {

namespace {

int hard_slice_binary(double soft, const std::vector<double>& levels) {
  // Binary alphabets only: nearest of the two levels.
  return std::abs(soft - levels[0]) <= std::abs(soft - levels[1]) ? 0 : 1;
}

class IdentityCode final : public OuterCode {
 public:
  std::string name() const override { return "identity"; }
  int info_bits_per_block() const override { return 1; }
  int symbols_per_block() const override { return 1; }
  int alphabet_size() const override { return 2; }

  std::vector<int> encode(const std::vector<int>& bits) const override {
    return bits;
  }

  std::vector<int> decode(const std::vector<double>& soft,
                          const std::vector<double>& levels) const override {
    return {hard_slice_binary(soft[0], levels)};
  }
};

class RepetitionCode final : public OuterCode {
 public:
  explicit RepetitionCode(int r) : r_(r) {
    if (r < 1) throw std::invalid_argument("repetition factor must be >= 1");
  }

  std::string name() const override {
    return "repetition-" + std::to_string(r_);
  }
  int info_bits_per_block() const override { return 1; }
  int symbols_per_block() const override { return r_; }
  int alphabet_size() const override { return 2; }

  std::vector<int> encode(const std::vector<int>& bits) const override {
    return std::vector<int>(r_, bits[0]);
  }

  std::vector<int> decode(const std::vector<double>& soft,
                          const std::vector<double>& levels) const override {
    // Soft-sum: antipodal levels make the summed estimate a sufficient
    // statistic; decide by its sign relative to the level midpoint.
    double sum = 0.0;
    for (double s : soft) sum += s;
    const double mid = r_ * 0.5 * (levels[0] + levels[1]);
    return {sum <= mid ? 0 : 1};
  }

 private:
  int r_;
};

// Systematic generator rows for data bits d1..d4 and parity columns
// p1 = d1+d2+d4, p2 = d1+d3+d4, p3 = d2+d3+d4.
class Hamming74Code final : public OuterCode {
 public:
  std::string name() const override { return "hamming74"; }
  int info_bits_per_block() const override { return 4; }
  int symbols_per_block() const override { return 7; }
  int alphabet_size() const override { return 2; }

  std::vector<int> encode(const std::vector<int>& bits) const override {
    std::vector<int> out(7);
    for (int i = 0; i < 4; ++i) out[i] = bits[i];
    out[4] = bits[0] ^ bits[1] ^ bits[3];
    out[5] = bits[0] ^ bits[2] ^ bits[3];
    out[6] = bits[1] ^ bits[2] ^ bits[3];
    return out;
  }

  std::vector<int> decode(const std::vector<double>& soft,
                          const std::vector<double>& levels) const override {
    std::array<int, 7> hard;
    for (int i = 0; i < 7; ++i) hard[i] = hard_slice_binary(soft[i], levels);

    const int s1 = hard[0] ^ hard[1] ^ hard[3] ^ hard[4];
    const int s2 = hard[0] ^ hard[2] ^ hard[3] ^ hard[5];
    const int s3 = hard[1] ^ hard[2] ^ hard[3] ^ hard[6];
    const int syndrome = s1 | (s2 << 1) | (s3 << 2);

    // Column of the parity-check matrix matching the syndrome gives the
    // flipped position (single-error correction).
    static constexpr std::array<int, 8> kFlip = {-1, 4, 5, 0, 6, 1, 2, 3};
    const int pos = kFlip[syndrome];
    if (pos >= 0) hard[pos] ^= 1;
    return {hard[0], hard[1], hard[2], hard[3]};
  }
};

}  // namespace

std::unique_ptr<OuterCode> make_identity_code() {
  return std::make_unique<IdentityCode>();
}

std::unique_ptr<OuterCode> make_repetition_code(int r) {
  return std::make_unique<RepetitionCode>(r);
}

std::unique_ptr<OuterCode> make_hamming74_code() {
  return std::make_unique<Hamming74Code>();
}

}  // namespace lfc
