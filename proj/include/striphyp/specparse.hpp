#pragma once

#include <stdexcept>
#include <string>

#include "striphyp/transforms.hpp"

namespace striphyp {

/// Malformed spec string; distinct from the invalid_argument thrown on
/// precondition failures so the CLI can map them to different exits.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// `power:s=0.5` | `explog:s=0.5,r=1` | `expoverlog:s=2` | `exp` |
/// `linear` | `log1p` | `twosqrt` | `zero` | `assoc:<seq-spec>`
Weight parse_weight(const std::string& spec);

/// `factorial:s=1` | `loglog:s=1,r=2` | `explicit:[1,1,2,6,24]`
WeightSequence parse_sequence(const std::string& spec);

/// `gaussian:a=1` | `gaussian:a=1,shift=0.5+0.2i` | `zero` |
/// `recip:<weight-spec>` | `product:<testfn>;<testfn>`
TestFunction parse_test_function(const std::string& spec);

/// `atoms:[(re+imi, order, coef), ...]` optionally `;density:<name>`;
/// density catalog: gauss_decay, exp_decay(mu)
Functional parse_functional(const std::string& spec);

complex parse_complex(const std::string& text);

WeightCond parse_weight_cond(const std::string& name);
SeqCondition parse_seq_cond(const std::string& name);

}  // namespace striphyp
