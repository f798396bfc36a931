// Exception type shared by every module.

#ifndef TAKAHASI_EXCEPTION_HPP_
#define TAKAHASI_EXCEPTION_HPP_

#include <sstream>    // for ostringstream
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for forward

namespace takahasi {

  //! Thrown on any precondition violation or failed validation.
  class TakahasiError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  namespace detail {
    template <typename... Args>
    [[noreturn]] void fail(Args&&... args) {
      std::ostringstream os;
      (os << ... << std::forward<Args>(args));
      throw TakahasiError(os.str());
    }
  }  // namespace detail

}  // namespace takahasi

#endif  // TAKAHASI_EXCEPTION_HPP_
