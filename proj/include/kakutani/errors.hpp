#pragma once

#include <stdexcept>
#include <string>

namespace kak {

// CLI exit codes; library errors map onto these.
enum class errc {
  ok = 0,
  config = 2,
  budget = 3,
  invariant = 4,
  certification = 5,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

struct mass_not_one_error : error {
  explicit mass_not_one_error(const std::string& w) : error(errc::config, w) {}
};
struct degenerate_block_error : error {
  explicit degenerate_block_error(const std::string& w) : error(errc::config, w) {}
};
struct config_error : error {
  explicit config_error(const std::string& w) : error(errc::config, w) {}
};
struct budget_exceeded_error : error {
  explicit budget_exceeded_error(const std::string& w) : error(errc::budget, w) {}
};
struct not_rank_one_error : error {
  explicit not_rank_one_error(const std::string& w) : error(errc::config, w) {}
};
struct not_higher_rank_error : error {
  explicit not_higher_rank_error(const std::string& w) : error(errc::config, w) {}
};
struct domain_error : error {
  explicit domain_error(const std::string& w) : error(errc::config, w) {}
};
struct empty_point_set_error : error {
  explicit empty_point_set_error(const std::string& w) : error(errc::config, w) {}
};
struct degenerate_data_error : error {
  explicit degenerate_data_error(const std::string& w) : error(errc::config, w) {}
};
struct rational_input_error : error {
  explicit rational_input_error(const std::string& w) : error(errc::config, w) {}
};
struct boundary_zero_error : error {
  explicit boundary_zero_error(const std::string& w) : error(errc::certification, w) {}
};
struct certification_error : error {
  explicit certification_error(const std::string& w) : error(errc::certification, w) {}
};
struct invariant_error : error {
  explicit invariant_error(const std::string& w) : error(errc::invariant, w) {}
};

}  // namespace kak
