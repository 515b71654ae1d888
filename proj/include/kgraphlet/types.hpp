#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace kgraphlet {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Raised when a caller violates a documented precondition (deleting a dead
// edge, rolling back past a consumed checkpoint, ...). Not meant to be caught
// in normal operation.
class ProgrammingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define KG_REQUIRE(cond, msg)                                            \
  do {                                                                   \
    if (!(cond)) throw ::kgraphlet::ProgrammingError(std::string(msg)); \
  } while (0)

// Non-owning reference to a callable. The referenced callable must outlive
// the FunctionRef; it is meant for sink parameters only.
template <typename Signature>
class FunctionRef;

template <typename R, typename... Args>
class FunctionRef<R(Args...)> {
 public:
  template <typename F>
    requires(!std::is_same_v<std::remove_cvref_t<F>, FunctionRef> &&
             std::is_invocable_r_v<R, F&, Args...>)
  FunctionRef(F&& f) noexcept  // NOLINT(google-explicit-constructor)
      : obj_(const_cast<void*>(static_cast<const void*>(std::addressof(f)))),
        call_([](void* obj, Args... args) -> R {
          return (*static_cast<std::remove_reference_t<F>*>(obj))(
              std::forward<Args>(args)...);
        }) {}

  R operator()(Args... args) const {
    return call_(obj_, std::forward<Args>(args)...);
  }

 private:
  void* obj_;
  R (*call_)(void*, Args...);
};

// A solution is handed to the sink as a view over the enumerator's working
// buffer. Ids appear in discovery order, not sorted; the view is only valid
// for the duration of the call.
using SolutionSink = FunctionRef<void(std::span<const std::uint32_t>)>;

}  // namespace kgraphlet
