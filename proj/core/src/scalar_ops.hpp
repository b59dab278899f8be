#pragma once

#include "uhg/field.hpp"

namespace uhg {

// Internal representation bridge shared by the library's translation units.
struct ScalarOps {
  static const Scalar::Payload& payload(const Scalar& s) { return s.v_; }

  static Scalar make(const Field* f, Scalar::Payload v) { return Scalar(f, std::move(v)); }

  static Scalar make_ext(const Field* f, Scalar a, Scalar b) {
    return Scalar(f, std::make_shared<const Scalar::Ext>(Scalar::Ext{std::move(a), std::move(b)}));
  }

  static const Scalar::Ext& ext(const Scalar& s) {
    return *std::get<std::shared_ptr<const Scalar::Ext>>(s.v_);
  }
};

}  // namespace uhg
