// Copyright 2026 The dgsem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// First-order formulas characterising conflict-freeness, closure, defence,
// admissibility and every extension type of an equivalence-equipped Dung
// model, together with the standard evaluation they are checked under.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgsem/argumentation.hpp"
#include "dgsem/environment.hpp"
#include "dgsem/formula.hpp"

namespace dgsem {

inline constexpr const char* kPD = "p_D";
inline constexpr const char* kPA = "p_A";
inline constexpr const char* kPAnnoEq = "p_AnnoEq";

/// Largest N accepted by the generators unless the caller raises it.
inline constexpr std::size_t kMaxGenerateN = 8;

/// p_A/2, p_A/1, p_D/0..max_arity and p_AnnoEq/3 bound to their skeletons.
Interpretation standard_environment(std::size_t max_arity);

enum class CmpVariant : std::uint8_t { defence, wide_defence, equivalence };

/// Builds characterisation formulas over arbitrary terms. Bound variables get
/// fresh names from a per-builder counter, so nested schemas never capture.
class FormulaBuilder {
 public:
  explicit FormulaBuilder(std::size_t max_n = kMaxGenerateN) : max_n_(max_n) {}

  /// Test hook: negates the attack literals of the conflict-freeness schema.
  void set_mutate_cf(bool on) { mutate_cf_ = on; }

  Formula cf(const std::vector<Term>& t);
  /// l = t.size(); the first k terms are the set being closed.
  Formula cl(std::size_t k, const std::vector<Term>& t);
  Formula wcf(const std::vector<Term>& t, std::size_t n);
  Formula df(const Term& c, const std::vector<Term>& t);
  Formula wdf(const Term& c, const std::vector<Term>& t, std::size_t n);
  Formula adm(const std::vector<Term>& t);
  Formula wadm(const std::vector<Term>& t, std::size_t n);
  Formula cmp(CmpVariant v, const std::vector<Term>& t, std::size_t n);

  /// Formula for spec on t. admissible ignores tau; equivalence uses the
  /// simple equivalence-complete schema for both sigmas; both conjoins the
  /// defence schema with kk-CL.
  Formula extension(const ExtensionSpec& spec, const std::vector<Term>& t, std::size_t n);
  /// Items 1..12: {defence, wide defence, equivalence} x {complete,
  /// preferred, grounded, stable}, complete first.
  Formula item(int index, const std::vector<Term>& t, std::size_t n);

  /// k2 = t.size() - k1.
  Formula distinct(std::size_t k1, const std::vector<Term>& t);
  /// Blocks of sizes ks laid out consecutively in t.
  Formula cmps(const std::vector<std::size_t>& ks, const std::vector<Term>& t, std::size_t n);

 private:
  std::string fresh(char letter);
  Term var(char letter) { return Term::var(fresh(letter)); }
  void check_n(std::size_t k, std::size_t n) const;

  Formula complete_base(const ExtensionSpec& spec, const std::vector<Term>& t, std::size_t n);
  Formula preferred(const ExtensionSpec& spec, const std::vector<Term>& t, std::size_t n);
  Formula grounded(const ExtensionSpec& spec, const std::vector<Term>& t, std::size_t n);
  Formula stable(const ExtensionSpec& spec, const std::vector<Term>& t, std::size_t n);

  std::size_t max_n_;
  std::size_t counter_ = 0;
  bool mutate_cf_ = false;
};

/// ExtensionSpec of items 1..12.
ExtensionSpec item_spec(int index);

/// Constant terms c1..ck (starting at `first`).
std::vector<Term> constants(std::size_t k, std::size_t first = 1);

// Entry points taking constant names; each checks the arity of the request
// and throws ArityMismatch or BoundExceeded.
Formula f_k_cf(std::size_t k, const std::vector<std::string>& consts);
Formula f_kl_cl(std::size_t k, std::size_t l, const std::vector<std::string>& consts);
Formula f_kn_wcf(std::size_t k, std::size_t n, const std::vector<std::string>& consts);
Formula f_k_df(std::size_t k, const std::string& c, const std::vector<std::string>& consts);
Formula f_kn_wdf(std::size_t k, std::size_t n, const std::string& c, const std::vector<std::string>& consts);
Formula f_adm(Sigma sigma, std::size_t k, std::size_t n, const std::vector<std::string>& consts);
Formula f_cmp(CmpVariant v, std::size_t k, std::size_t n, const std::vector<std::string>& consts);
Formula f_extension(int item, std::size_t k, std::size_t n, const std::vector<std::string>& consts);
Formula f_distinct(std::size_t k1, std::size_t k2, const std::vector<std::string>& consts);
Formula f_cmps(const std::vector<std::size_t>& ks, std::size_t n, const std::vector<std::string>& consts);

}  // namespace dgsem
