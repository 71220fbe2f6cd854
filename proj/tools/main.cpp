// placeholder until the session layer lands
int main() { return 0; }
