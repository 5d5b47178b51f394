#include "api.hpp"

namespace cli {

void check(cornell_status status) {
  if (status == CORNELL_OK) return;
  std::string message = cornell_last_error();
  if (message.empty()) message = cornell_status_name(status);
  throw ApiError(status, message);
}

}  // namespace cli
