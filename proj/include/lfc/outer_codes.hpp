#ifndef LFC_OUTER_CODES_HPP
#define LFC_OUTER_CODES_HPP

#include <memory>
#include <string>
#include <vector>

namespace lfc {

/// Outer forward-error-correction code over the superchannel.  Encoding
/// maps info bits to symbol indices; decoding consumes the soft symbol
/// estimates produced by the inner combiner.
class OuterCode {
 public:
  virtual ~OuterCode() = default;

  virtual std::string name() const = 0;
  virtual int info_bits_per_block() const = 0;   ///< K_info
  virtual int symbols_per_block() const = 0;     ///< K
  virtual int alphabet_size() const = 0;         ///< M expected by the mapper

  /// bits (size K_info) -> symbol indices in [0, M) (size K).
  virtual std::vector<int> encode(const std::vector<int>& bits) const = 0;

  /// soft estimates (size K) with a reference level set -> decoded bits.
  virtual std::vector<int> decode(const std::vector<double>& soft,
                                  const std::vector<double>& levels) const = 0;
};

/// K_info = K = 1, binary; hard slice of the single soft value.
std::unique_ptr<OuterCode> make_identity_code();

/// Rate-1/r binary repetition with soft-sum decoding.
std::unique_ptr<OuterCode> make_repetition_code(int r);

/// Hamming(7,4), binary, syndrome decoding over hard-sliced symbols.
std::unique_ptr<OuterCode> make_hamming74_code();

}  // namespace lfc

#endif
