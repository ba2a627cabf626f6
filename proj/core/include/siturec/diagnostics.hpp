#pragma once

#include <functional>
#include <string>

namespace siturec {

/// Non-fatal warnings (an unmapped agenda contact and the like) go
/// through this sink; a default-constructed sink drops them.
using DiagnosticSink = std::function<void(const std::string&)>;

inline void diag(const DiagnosticSink& sink, const std::string& message) {
  if (sink) sink(message);
}

}  // namespace siturec
