#include "pavlov/common.hpp"

namespace pavlov {

const char* version() { return PAVLOV_VERSION_STRING; }

}  // namespace pavlov
